#!/usr/bin/env python3
"""Plot CSV output of the crwphoton CLI.

Usage:
    crwphoton spectrum --preset fig3a --no-timestamp --out fig3a.csv
    python3 docs/plot.py fig3a.csv

Spectrum files (columns k, T, R) are drawn as two curves; profile files
(j/x, ..., abs2_*) as probability profiles; contour files (j, Omega, abs2_u)
as a 2-D map.
"""

import csv
import sys

import matplotlib.pyplot as plt


def load(path):
    header, columns, rows = {}, [], []
    with open(path, newline="") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                header[key.strip()] = value.strip()
            elif not columns:
                columns = line.split(",")
            else:
                rows.append(line.split(","))
    return header, columns, rows


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    header, columns, rows = load(sys.argv[1])
    data = {c: [float(r[i]) if c != "flag" else r[i] for r in rows]
            for i, c in enumerate(columns)}

    if columns[:3] == ["k", "T", "R"]:
        plt.plot(data["k"], data["T"], "r--", label="T")
        plt.plot(data["k"], data["R"], "b-", label="R")
        plt.xlabel("k")
        plt.legend()
    elif columns == ["j", "Omega", "abs2_u"]:
        js = sorted(set(data["j"]))
        oms = sorted(set(data["Omega"]))
        grid = [[0.0] * len(js) for _ in oms]
        index = {(j, o): v for j, o, v in zip(data["j"], data["Omega"],
                                              data["abs2_u"])}
        for a, o in enumerate(oms):
            for b, j in enumerate(js):
                grid[a][b] = index[(j, o)]
        plt.pcolormesh(js, oms, grid, shading="nearest")
        plt.xlabel("j")
        plt.ylabel("Omega")
        plt.colorbar(label="|u|^2")
    else:
        x = data.get("j", data.get("x"))
        for c in columns:
            if c.startswith("abs2"):
                plt.plot(x, data[c], label=c)
        plt.xlabel("j" if "j" in data else "x")
        plt.legend()
    plt.title(header.get("command", "") + " " + header.get("model", ""))
    plt.show()


if __name__ == "__main__":
    main()
