"""Compare the complex Gauss map of Weierstrass surfaces with candidate closed forms.

For each (p, q) and sample point the script prints which of q, conj(q),
1/conj(q) and -i/q' agree with stereographic(normal) to 1e-9.
"""
from fractions import Fraction

from harmgauss.harmonic import AnalyticPolynomial as AP
from harmgauss.rational import CQ
from harmgauss.weierstrass import WeierstrassData, gauss_vs_q

DATA = {
    "p=1, q=z": WeierstrassData(AP.const(1), AP.monomial(1)),
    "p=1, q=z^2": WeierstrassData(AP.const(1), AP.monomial(2)),
    "p=z, q=(1+i)z+1/2": WeierstrassData(AP.monomial(1) + 1, AP((CQ(Fraction(1, 2)), CQ(1, 1)))),
}
POINTS = [(Fraction(1, 2), Fraction(0)), (Fraction(1, 3), Fraction(1, 4)), (Fraction(-2, 5), Fraction(3, 7))]


def main():
    for label, data in DATA.items():
        print(label)
        for row in gauss_vs_q(data, POINTS):
            x, y = row["point"]
            print(f"  ({x}, {y})  g = {row['gauss']:.6f}  matches: {', '.join(row['matches']) or '-'}")


if __name__ == "__main__":
    main()
