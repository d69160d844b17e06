#!/usr/bin/env python3
# Copyright 2026 The elastovem authors. All rights reserved.
# This file is licensed to you under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License. You may obtain a copy
# of the License at http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under
# the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
# OF ANY KIND, either express or implied. See the License for the specific language
# governing permissions and limitations under the License.
"""Centroidal Voronoi meshes of a rectangle in the native JSON mesh format."""

import argparse
import json

import numpy as np
from scipy.spatial import Voronoi
from shapely.geometry import Polygon, box


def reflect(seeds, x0, y0, x1, y1):
    parts = [seeds]
    for axis, value in ((0, x0), (0, x1), (1, y0), (1, y1)):
        r = seeds.copy()
        r[:, axis] = 2.0 * value - r[:, axis]
        parts.append(r)
    return np.vstack(parts)


def voronoi_cells(seeds, domain):
    vor = Voronoi(reflect(seeds, *domain.bounds))
    cells = []
    for i in range(len(seeds)):
        region = vor.regions[vor.point_region[i]]
        poly = Polygon(vor.vertices[region]).intersection(domain)
        cells.append(poly)
    return cells


def lloyd(seeds, domain, iterations):
    for _ in range(iterations):
        cells = voronoi_cells(seeds, domain)
        seeds = np.array([[c.centroid.x, c.centroid.y] for c in cells])
    return seeds


def to_mesh(cells, domain, tol):
    x0, y0, x1, y1 = domain.bounds
    index = {}
    vertices = []
    out = []

    def key(p):
        x, y = p
        for edge in (x0, x1):
            if abs(x - edge) < tol:
                x = edge
        for edge in (y0, y1):
            if abs(y - edge) < tol:
                y = edge
        return (round(x / tol), round(y / tol)), (x, y)

    for poly in cells:
        ring = list(poly.exterior.coords)[:-1]
        loop = []
        for p in ring:
            k, q = key(p)
            if k not in index:
                index[k] = len(vertices)
                vertices.append(q)
            v = index[k]
            if not loop or loop[-1] != v:
                loop.append(v)
        if loop[0] == loop[-1]:
            loop.pop()
        area = 0.0
        for a, b in zip(loop, loop[1:] + loop[:1]):
            area += vertices[a][0] * vertices[b][1] - vertices[b][0] * vertices[a][1]
        if area < 0:
            loop.reverse()
        out.append(loop)
    return vertices, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cells", type=int, default=64)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--lloyd", type=int, default=30)
    parser.add_argument("--domain", type=float, nargs=4, default=[0.0, 0.0, 1.0, 1.0])
    parser.add_argument("output")
    args = parser.parse_args()

    domain = box(*args.domain)
    rng = np.random.default_rng(args.seed)
    x0, y0, x1, y1 = args.domain
    seeds = rng.uniform([x0, y0], [x1, y1], size=(args.cells, 2))
    seeds = lloyd(seeds, domain, args.lloyd)
    vertices, cells = to_mesh(voronoi_cells(seeds, domain), domain, 1e-9)
    with open(args.output, "w") as f:
        json.dump({"vertices": [list(v) for v in vertices], "cells": cells}, f)


if __name__ == "__main__":
    main()
