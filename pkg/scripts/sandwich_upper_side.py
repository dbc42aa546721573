"""Exact check of the (m+1)/4 upper side of the m-convex sandwich.

Uses rational arithmetic on power functions x^n, whose integrals are exact,
to show where the displayed upper side falls below the averaged integral.

    python scripts/sandwich_upper_side.py
"""

from __future__ import annotations

from fractions import Fraction as Fr


def sides(n: int, a: Fr, b: Fr, m: Fr) -> tuple[Fr, Fr, Fr]:
    f = lambda x: x**n  # noqa: E731
    mean = (b ** (n + 1) - a ** (n + 1)) / ((n + 1) * (b - a))
    # mean of f(x/m) over [a, b] is mean(f) / m^n for a power function
    middle = (mean + m * mean / m**n) / 2
    left = f((a + b) / 2)
    right = (m + 1) / 4 * ((f(a) + f(b)) / 2 + m * (f(a / m) + f(b / m)) / 2)
    return left, middle, right


def main() -> None:
    print(f"{'n':>2} {'[a, b]':>9} {'m':>5} {'left':>12} {'middle':>12} {'right':>12}  upper side")
    for n in (2, 3):
        for a, b in ((Fr(0), Fr(1)), (Fr(1, 2), Fr(2)), (Fr(1), Fr(3))):
            for m in (Fr(1, 4), Fr(1, 2), Fr(1)):
                left, middle, right = sides(n, a, b, m)
                verdict = "holds" if middle <= right else f"FAILS by {middle - right}"
                print(f"{n:>2} [{str(a):>3}, {str(b):>1}] {str(m):>5} {str(left):>12} {str(middle):>12} "
                      f"{str(right):>12}  {verdict}")


if __name__ == "__main__":
    main()
