"""Checking the A/B/C identity catalog in bulk.

Run with ``python demos/identities.py``.
"""

from tribabc import Letter, compose
from tribabc.sequences import compose_direct
from tribabc.verify import CHECKS, run_checks

# %% one composition spelled out: C(C(k) + 1) is linear in A(k), B(k), k
for k in range(5):
    print(k, compose(Letter.C, Letter.C, k), compose_direct(Letter.C, Letter.C, k))

# %% the full suite at a modest bound
for report in run_checks(None, 2000, workers=4):
    print(f"{report.line():70s} {CHECKS[report.check_id][1]}")
