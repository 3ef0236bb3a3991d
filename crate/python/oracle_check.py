#!/usr/bin/env python3
"""Cross-check reduced Groebner bases against sympy.

Requires the extension module (`cargo build -p hbforge-py`) and sympy.
For each sample ideal, over both the rationals and GF(32003) and in both
the grevlex and lex orders, the reduced basis computed by hbforge must
match sympy's, element by element after normalization.
"""

import os
import shutil
import sys
import tempfile

import sympy as sp
from sympy import groebner, symbols

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

CASES3 = [
    ["x**2 - y*z", "x*y - z**2"],
    ["x**2 + y**2 + z**2", "x*y + x*z + y*z", "x*y*z"],
    ["x**3 - y**2*z", "x*z - y**2", "y**5 - z**3*x**2"],
    ["x**2*y - z**3", "x*y**2 + y*z**2 - x**2*z"],
    ["x**4 + y**4 + z**4", "x**3*y - y**3*z"],
    ["x*y + y*z", "y**2 - z**2", "x**2 - 7*z**2"],
]

CASES4 = [
    ["x*w - y*z", "x*z - y**2", "y*w - z**2"],
    ["x**2 + y**2 - z*w", "x*y*z - w**3", "x - 2*y + 3*z"],
]

SUITES = [
    (["x", "y", "z"], CASES3),
    (["x", "y", "z", "w"], CASES4),
]


def load_module():
    for profile in ("release", "debug"):
        so = os.path.join(ROOT, "target", profile, "libhbforge_py.so")
        if os.path.exists(so):
            stage = tempfile.mkdtemp(prefix="hbforge_py_")
            shutil.copy(so, os.path.join(stage, "hbforge_py.so"))
            sys.path.insert(0, stage)
            import hbforge_py

            return hbforge_py
    sys.exit("libhbforge_py.so not found; run `cargo build -p hbforge-py` first")


def main():
    hb = load_module()
    failures = 0
    for names, cases in SUITES:
        syms = symbols(" ".join(names))
        for field, modulus in (("Q", None), ("32003", 32003)):
            for order in ("grevlex", "lex"):
                ring = hb.Ring(names, field=field, order=order)
                for gens in cases:
                    kwargs = {"order": order}
                    if modulus:
                        kwargs["modulus"] = modulus
                        kwargs["symmetric"] = False
                    reference = groebner(
                        [sp.sympify(g) for g in gens], *syms, **kwargs
                    )
                    ours = ring.ideal(
                        [g.replace("**", "^") for g in gens]
                    ).groebner_basis()

                    normalize = lambda text: str(ring.poly(text))
                    ours_set = {normalize(p) for p in ours}
                    # both sides monic (sympy clears denominators over Q);
                    # rebuild the text term by term so coefficients print as
                    # plain fractions the parser accepts
                    def term_text(poly):
                        # monic with respect to the order under test; sympy's
                        # Poly.monic() always uses the lex leading coefficient
                        lc = poly.LT(order=order)[1]
                        dom = poly.domain
                        out = ""
                        for exps, raw in poly.terms(order=order):
                            coeff = dom.quo(dom.convert(raw), dom.convert(lc))
                            mono = "*".join(
                                f"{n}^{e}" for n, e in zip(names, exps) if e
                            )
                            c = str(coeff)
                            sign, mag = (
                                ("-", c[1:]) if c.startswith("-") else ("+", c)
                            )
                            body = mag + (f"*{mono}" if mono else "")
                            out += f" {sign} {body}" if out else (
                                body if sign == "+" else f"-{body}"
                            )
                        return out or "0"

                    ref_set = {normalize(term_text(p)) for p in reference.polys}
                    ok = ours_set == ref_set
                    print(
                        f"[{'OK' if ok else 'MISMATCH'}] field={field} "
                        f"order={order} gens={gens}"
                    )
                    if not ok:
                        failures += 1
                        print("  ours:", sorted(ours_set))
                        print("  sympy:", sorted(ref_set))
    if failures:
        sys.exit(f"{failures} mismatches")
    print("oracle check: all bases agree")


if __name__ == "__main__":
    main()
