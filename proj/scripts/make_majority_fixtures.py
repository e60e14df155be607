"""Writes fixtures/ex4-n{3,5,7}: kappa = f_n with f_n <-> (f_1 + ... + f_{n-1} >= n // 2)."""

import itertools
import json
import pathlib
import sys


def write(root: pathlib.Path, n: int) -> None:
    k = n // 2
    names = [f"f{i}" for i in range(1, n + 1)]
    rest = names[:-1]
    last = names[-1]
    nogoods = []
    # f_n = 0 but at least k ones among the others.
    for ones in itertools.combinations(rest, k):
        nogoods.append([f"{last}=0"] + [f"{f}=1" for f in ones])
    # f_n = 1 but at least n - k zeros among the others (fewer than k ones).
    for zeros in itertools.combinations(rest, n - k):
        nogoods.append([f"{f}=0" for f in zeros] + [f"{last}=1"])
    d = root / f"ex4-n{n}"
    d.mkdir(parents=True, exist_ok=True)
    theory = {"features": [{"name": f, "domain": ["0", "1"]} for f in names], "classes": ["0", "1"]}
    (d / "theory.json").write_text(json.dumps(theory, indent=2) + "\n")
    (d / "classifier.json").write_text(json.dumps({"kind": "expr", "formula": f"{last}=1"}, indent=2) + "\n")
    (d / "constraints.json").write_text(json.dumps({"nogoods": nogoods}, indent=2) + "\n")


if __name__ == "__main__":
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    for n in (3, 5, 7):
        write(root, n)
