"""Write sample CLI input files (surfaces and Weierstrass data) into a directory."""
import argparse
from pathlib import Path

from harmgauss import io
from harmgauss.harmonic import Poly2, to_analytic
from harmgauss.surface import surface_from_polys
from harmgauss.verify import planar_family_surface, branch_line_surface


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="inputs")
    out = Path(parser.parse_args().outdir)
    out.mkdir(parents=True, exist_ok=True)
    x, y = Poly2.x(), Poly2.y()
    files = {
        "saddle.json": io.encode_surface(surface_from_polys(x, y, x * y)),
        "remark.json": io.encode_surface(branch_line_surface()[0]),
        "planar_family.json": io.encode_surface(planar_family_surface(1, 0, 2, to_analytic(x ** 2 - y ** 2))),
        "non_harmonic.json": {k: io.encode_poly2(p) for k, p in zip("abc", (x, y, x ** 2 + y ** 2))},
        "enneper_pq.json": {"p": [{"re": "1/1", "im": "0/1"}], "q": [{"re": "0/1", "im": "0/1"}, {"re": "1/1", "im": "0/1"}]},
        "flat_pq.json": {"p": [{"re": "1/1", "im": "0/1"}], "q": []},
        "bad_phi.json": {"phi": [[{"re": "1/1", "im": "0/1"}], [], []]},
    }
    for name, obj in files.items():
        (out / name).write_text(io.dump_json(obj))
        print(out / name)


if __name__ == "__main__":
    main()
