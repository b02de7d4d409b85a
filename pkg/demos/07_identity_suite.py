"""
Running the identity checks
===========================

Each check quantifies a statement over its whole domain and reports
pass, fail, vacuous (empty domain) or inapplicable (hypotheses absent).
"""

from collections import Counter

from zmoufang import MoufangSet, build_projective_line, build_suzuki, run_check, run_suite

for M in (build_projective_line(8), build_suzuki(8)):
    rep = run_suite(M, jobs=2)
    print(M.kind, rep.passed, Counter(r.status.value for r in rep.results))

# one check in detail
r = run_check("SUZ5.10b", build_suzuki(8))
print(r.check_id, r.anchor, r.status.value, r.cases_checked)

# a broken tau is caught, with a witness
M = build_suzuki(8)
t = M.tau.images.copy()
t[9], t[63] = t[63], t[9]
bad = MoufangSet(M.U, t, kind="suzuki")
print(bad.verify_moufang().counterexample)
print(run_check("E3A", bad).counterexample)
