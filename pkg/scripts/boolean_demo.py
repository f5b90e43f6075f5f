"""dim((F_2)^k (x)_Z B) against dim(B/2B) for a few hand-picked B."""

from fibredim.dsl import parse_algebra
from fibredim.spectra import closed, dim_at
from fibredim.theorems import boolean_dim

EXAMPLES = {
    "Z[x,y]": '{"base": {"kind": "Z"}, "vars": ["x", "y"]}',
    "Z": '{"base": {"kind": "Z"}, "vars": []}',
    "Z[x]/(x^2 + x)": '{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["x^2 + x"]}',
    "Z[x,y]/(2x - 1)": '{"base": {"kind": "Z"}, "vars": ["x", "y"], "relations": ["2*x - 1"]}',
    "Z[x,y,z]/(x*y - 2*z)": '{"base": {"kind": "Z"}, "vars": ["x", "y", "z"], '
                            '"relations": ["x*y - 2*z"]}',
    "Z[x,y]/(3x - y^2)": '{"base": {"kind": "Z"}, "vars": ["x", "y"], '
                         '"relations": ["3*x - y^2"]}',
}


def main():
    print(f"{'B':<24}{'dim(B/2B)':>10}" + "".join(f"{'k=' + str(k):>8}" for k in (1, 2, 4)))
    for name, doc in EXAMPLES.items():
        B = parse_algebra(doc)
        direct = dim_at(B, closed(2))
        if direct.is_empty:
            print(f"{name:<24}{'Empty':>10}   (F_2)^k (x) B = 0")
            continue
        row = []
        for k in (1, 2, 4):
            r = boolean_dim(k, B)
            mark = "" if r.agreement else "!"
            row.append(f"{str(r.formula) + mark:>8}")
        print(f"{name:<24}{str(direct):>10}" + "".join(row))


if __name__ == "__main__":
    main()
