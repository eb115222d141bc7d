"""Rewrite the golden files from the current CLI.  Run from anywhere:

    python tests/golden/regen.py
"""

import contextlib
import io
import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

CASES = {
    "canon_cubic_shear": ["--json", "canon", "x^3 + y"],
    "canon_two_steps": ["--json", "canon", "(x + y^2)^2 + y"],
    "canon_minimal_cusp": ["--json", "canon", "x^2 - y^3"],
    "canon_needs_extension": ["--json", "canon", "x^2 - 2*y^4 + y"],
    "canon_syntax_error": ["--json", "canon", "x^2 +* y"],
    "canon_human": ["canon", "(x+y)^3 + x"],
    "equiv_thm11": ["--json", "equiv", "x^3 + y^2 + x*y", "x^5 + y^3 + x*y"],
    "equiv_witness": ["--json", "equiv", "x^2 - y^3", "(x + y^2)^2 - y^3"],
    "equiv_canon_degree": ["--json", "equiv", "x*y", "x^2 - y^3"],
    "equiv_unknown": ["--json", "equiv", "x^2 - y^3", "x^2 - 2*y^3", "--budget-len", "2"],
    "equiv_bad_budget": ["--json", "equiv", "x", "y", "--budget-len", "0"],
    "is_auto_no": ["--json", "is-auto", "x; x*y"],
    "is_auto_yes": ["--json", "is-auto", "y; x + y^2"],
    "is_auto_bad_text": ["--json", "is-auto", "x; y; x"],
    "factor_swap_shear": ["--json", "factor", "y; x + y^2"],
    "factor_rejected": ["--json", "factor", "x + y^2; y + x^2"],
    "invert_shift_shear": ["--json", "invert", "x + y^2; y + 1"],
    "reduce_pair_two_steps": ["--json", "reduce-pair", "t^3 + t; t"],
    "reduce_pair_minimal": ["--json", "reduce-pair", "t^2; t^3"],
    "pair_equiv_rescaled": ["--json", "pair-equiv", "t^2; t^3", "4*t^2; 8*t^3"],
    "pair_equiv_unknown": ["--json", "pair-equiv", "t^2; t^3", "t^2; t^5"],
    "zl_screen_cusp": ["--json", "zl-screen", "x^2 - y^3"],
    "zl_screen_two_branches": ["--json", "zl-screen", "x^2 - y^4"],
    "zl_screen_shape": ["--json", "zl-screen", "x^2*y + x"],
    "zl_screen_degenerate": ["--json", "zl-screen", "(x - y^2)^2 + y"],
    "zl_decide_cusp": ["--json", "zl-decide", "x^2 - y^3", "--param", "t^3; t^2"],
    "zl_decide_coordinate": ["--json", "zl-decide", "y - x^2", "--param", "t; t^2"],
    "zl_decide_off_fiber": ["--json", "zl-decide", "x^2 - y^3", "--param", "t^3 + 1; t^2"],
    "zl_decide_node": ["--json", "zl-decide", "x^2 - y^2 - y^3", "--param", "t^3 - t; t^2 - 1"],
    "coord_yes": ["--json", "coord", "y + x^3"],
    "coord_no": ["--json", "coord", "x^2 - y^3"],
    "coord_constant": ["--json", "coord", "5"],
    "normal_form_upper": ["--json", "normal-form", "x + y^2; y"],
    "normal_form_swap": ["--json", "normal-form", "y; x"],
    "normal_form_two": ["--json", "normal-form", "x + y^2; y + (x + y^2)^3"],
    "normal_form_rejected": ["--json", "normal-form", "x; x*y"],
    "normal_form_human": ["normal-form", "x + y^2; y + (x + y^2)^3"],
    "e1e2_cancel": ["--json", "e1e2-nf", "{golden}/words/cancel.txt"],
    "e1e2_alternating": ["--json", "e1e2-nf", "{golden}/words/alternating.txt"],
    "e1e2_abelian": ["--json", "e1e2-nf", "{golden}/words/abelian.txt"],
    "e1e2_remerge": ["--json", "e1e2-nf", "{golden}/words/remerge.txt"],
    "e1e2_bad_letter": ["--json", "e1e2-nf", "{golden}/words/bad.txt"],
    "e1e2_missing_file": ["--json", "e1e2-nf", "{golden}/words/nope.txt"],
    "sample_auto": ["--json", "--seed", "3", "sample", "auto"],
    "sample_word": ["--json", "--seed", "5", "sample", "word"],
}


def run(argv):
    from tamepoly.cli import main

    argv = [a.replace("{golden}", HERE) for a in argv]
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue().replace(HERE, "{golden}")


def main():
    for name, argv in CASES.items():
        code, out, err = run(argv)
        rec = {"args": argv, "exit": code, "stdout": out, "stderr": err}
        with open(os.path.join(HERE, f"{name}.json"), "w", encoding="utf-8") as fh:
            json.dump(rec, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    sys.exit(main())
