"""Closed forms for paths and cycles, cross-checked against the solver.

Cycles need roughly two vertices out of every five: consecutive pairs
spaced five apart cover their neighbors by adjacency and everyone else
by two distance-2 witnesses.  Paths pay a small boundary penalty on one
residue class.
"""

from dtdom import (
    DominationKind,
    cycle_witness,
    dtd_cycle_formula,
    dtd_path_formula,
    exact_number,
    generate_named,
    gt_cycle_formula,
    is_dtd_set,
)

DTD = DominationKind.DISJUNCTIVE_TOTAL_DOMINATION

print(" n | dtd(C_n) formula/solver | dtd(P_n) | gt(C_n) | witness of C_n")
for n in range(3, 16):
    cn = generate_named(f"C{n}")
    pn = generate_named(f"P{n}")
    cf, pf, gf = dtd_cycle_formula(n), dtd_path_formula(n), gt_cycle_formula(n)
    cs = exact_number(cn, DTD).value
    ps = exact_number(pn, DTD).value
    w = cycle_witness(n)
    assert is_dtd_set(cn, w) and len(w) == cf
    mark = "ok" if (cf, pf) == (cs, ps) else "MISMATCH"
    print(f"{n:2d} | {cf}/{cs} {mark:8} | {pf}/{ps} | {gf} | {sorted(w)}")

# the witness pattern keeps working far beyond solver range
for n in (50, 101, 203):
    w = cycle_witness(n)
    assert is_dtd_set(generate_named(f"C{n}"), w)
    print(f"C_{n}: witness of size {len(w)} = formula {dtd_cycle_formula(n)}")
