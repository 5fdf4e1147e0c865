"""Running the identity audit and reading its counterexamples.

Each catalog case checks both sides of an identity over a parameter grid.
Known-wrong variants are kept as audit-only cases, so the report shows the
smallest parameters at which they break next to the corrected form.
"""

from qbernoulli.audit import get_case, run_audit

pairs = [
    ("THM1-PRINTED", "THM1-CORRECTED"),
    ("EQ13-PRINTED", "EQ13-CORRECTED"),
    ("EQ23-PRINTED", "EQ23-CORRECTED"),
    ("THM2-PRINTED", "THM2-CORRECTED"),
]
report = run_audit([cid for pair in pairs for cid in pair])
by_id = {r.id: r for r in report.results}

for variant, corrected in pairs:
    p, c = by_id[variant], by_id[corrected]
    print(get_case(corrected).description)
    ce = p.counterexample
    print(f"  variant:    {p.status} at {ce['params']}: lhs {ce['lhs']}, rhs {ce['rhs']}")
    print(f"  corrected:  {c.status} on {c.checked} grid points\n")

full = run_audit()
print("full catalog:", full.summary)
