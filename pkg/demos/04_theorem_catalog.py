"""
Running the characterization catalog on one module
==================================================

Each catalog entry checks one structural statement two ways and compares
the sides: for an equivalence-style entry every side must land on the same
truth value, for an assertion-style entry every side must hold. A verdict
that fails carries a witness string naming the first disagreement.
"""

from sumess import CATALOG_ALL, ModuleAnalysis, integer_module, run_catalog

az = ModuleAnalysis(integer_module("z8z2", 8, 2))

print("catalog ids:", ", ".join(CATALOG_ALL))
print()

for v in run_catalog(az, "all"):
    status = "pass" if v.passed else ("FAIL" if v.applicable else "n/a")
    print(f"{v.theorem_id:20s} {status}")
    for k, val in v.sides.items():
        print(f"    {k} = {val}")
    if v.witness:
        print(f"    witness: {v.witness}")

# Hypotheses matter: the completeness entry only says something nontrivial
# here, while on a uniform module like Z27 the proper graph is empty and
# several entries report not applicable instead of passing vacuously.
print()
az27 = ModuleAnalysis(integer_module("z27", 27))
for v in run_catalog(az27, ("thm-2.13", "complete", "npartite")):
    status = "pass" if v.passed else ("FAIL" if v.applicable else "n/a")
    print(f"z27 {v.theorem_id:12s} {status}  {v.witness or ''}")

# Single entries run by id, and verdicts serialize for machine use.
verdict = run_catalog(az, "complete")[0]
print()
print(verdict.as_dict())
