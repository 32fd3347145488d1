"""
Cross-checking the structured enumerator against a naive search
===============================================================

"""

# the structured enumerator works Sylow-by-Sylow through the holomorph;
# the oracle grows subgroups from every viable generator pair with no
# structural shortcuts.  Both must land on the same conjugacy classes.
from braceforge.algebra import group_spec
from braceforge.regular import (
    orbit_min_key,
    regular_subgroups_oracle,
    regular_subgroups_structured,
)

spec = group_spec(5, 3, "mixed")
print(f"carrier {spec.kind} of order {spec.n}, |Hol| = {spec.hol_order}")

structured = regular_subgroups_structured(spec)
oracle = regular_subgroups_oracle(spec)
print(f"structured enumerator: {len(structured)} class representatives")
print(f"naive oracle:          {len(oracle)} regular subgroups in total")

# compare at the level of conjugacy classes via canonical orbit keys
keys_structured = {orbit_min_key(spec, G.elements)[0] for G in structured}
keys_oracle = {orbit_min_key(spec, G.elements)[0] for G in oracle}
assert keys_structured == keys_oracle
print(f"orbit sets agree: {len(keys_oracle)} classes either way")
