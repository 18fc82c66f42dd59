"""The extremal families and their reference values.

Three families of order 3k+1 meet the general 2(n-1)/3 bound exactly:
spiders with twice-subdivided legs, a rewired variant, and the variant
closed by one extra edge.  On the claw-free side, cliques with pendant
double-arms meet 4n/7.
"""

from dtdom import (
    DominationKind,
    FamilyClass,
    classify,
    dtd_reference_value,
    exact_number,
    generate_named,
    in_class,
    is_claw_free,
    parse_family_id,
)

DTD = DominationKind.DISJUNCTIVE_TOTAL_DOMINATION

for name in ("T(2)", "T(3)", "F(2)", "F(3)", "G(2)", "G(3)", "TStar",
             "H(1)", "H(2)", "L(5)", "L(13)"):
    fid = parse_family_id(name)
    g = generate_named(name)
    got = exact_number(g, DTD).value
    ref = dtd_reference_value(fid)
    print(f"{name:6} n={g.n:2d} dtd={got} (reference {ref}) claw-free={is_claw_free(g)}")
    assert got == ref

# membership testing works up to isomorphism
print("\nP4 in the T-family:", in_class(generate_named("P4"), FamilyClass.CAL_T))
print("C7 classification:", classify(generate_named("C7")))
print("C7 in S1:", in_class(generate_named("C7"), FamilyClass.CAL_S1))
print("H(1) doubles as L(2):", classify(generate_named("H(1)")))

# the order-10 member of the one-cycle family is the lone large claw-free
# graph above the 4n/7 bound, which is why it sits on the exception list
g3 = generate_named("G(3)")
print("\nG(3): n=10, dtd =", exact_number(g3, DTD).value, "> 4n/7 =", 40 / 7)
