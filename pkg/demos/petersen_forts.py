"""Forts of the Petersen graph, its zero forcing number, and why Y stops short of using minimal forts alone."""

from fortnull import all_forts, min_transversal, minimal_forts, petersen, petersen_incompatibility_audit, \
    y_number, zero_forcing_number

P = petersen()
forts = minimal_forts(P)
print(f"Petersen: {len(all_forts(P))} forts, {len(forts)} minimal")
for F in forts.as_lists():
    print("  ", F)

Z, B = zero_forcing_number(P)
print(f"Z = {Z} (witness {sorted(B)}), tau of the minimal forts = {min_transversal(forts).size}")

# No compatible family of minimal forts reaches 5; the witness for Y uses larger forts.
rep = petersen_incompatibility_audit()
print("compatible subfamilies by transversal number:", rep["scan"]["by_tau"])
print("propagation from the five forts private to the outer cycle:")
for e in rep["trace"]["log"]:
    if e["outcome"] != "open":
        print(f"   {e['F1']} and {e['F2']} at x={e['x']}: {e['outcome']} {e['candidates']}")

y = y_number(P)
print(f"Y = {y.value} (proven={y.proven}) with a compatible family of {len(y.witness)} forts")
