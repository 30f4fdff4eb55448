#!/usr/bin/env python3
# Positive controls: on finite (discrete, hence Hausdorff) groupoids the
# three properties that fail over the non-Hausdorff stars all hold whenever
# the groupoid is principal -- and all die as soon as isotropy appears.

from germoid import (
    FiniteGroupoid,
    diagonal_masa_check,
    faithfulness_check,
    intersection_property_check,
    key_inequality_check,
    principality,
)
from germoid.perms import PermGroup, parse_cycles


def run(name, G, seed=0):
    flags = principality(G)
    masa = diagonal_masa_check(G)
    inter = intersection_property_check(G, seed=seed)
    faith = faithfulness_check(G, seed=seed)
    print(f"\n{name}: {G.describe()}")
    print(f"  principal:                      {flags.principal}")
    print(f"  diagonal is maximal abelian:    {masa.is_masa} (commutant dim {masa.commutant_dim})")
    print(f"  ideals meet the diagonal:       {inter.holds}")
    print(f"  faithful-on-diagonal => faithful: {faith.holds}")


# A free action: the groupoid is a full equivalence relation on the orbit,
# its algebra one matrix block, and everything holds.
run("free Z/3 on 3 points", FiniteGroupoid.transformation(3, PermGroup.cyclic(3)))

# Equivalence relations are principal by construction.
run("full relation on 4 points", FiniteGroupoid.full_equivalence(4))

# The minimal negative control: a 2-element group stuck at one point.  The
# algebra splits into two characters and the diagonal (just the unit) cannot
# see the difference, so every property fails at once.
z2 = PermGroup.generate(2, [parse_cycles("(1 2)", 2)])
run("Z/2 fixed at a point", FiniteGroupoid.trivial_action(1, z2))

# The inequality driving the positive results: at isotropy-free units the
# value of any element is dominated by its operator norm.
G = FiniteGroupoid.transformation(3, PermGroup.cyclic(3))
report = key_inequality_check(G, trials=500, seed=0)
print(
    f"\nkey inequality on {report.units_tested} isotropy-free units, "
    f"{report.trials} random elements: {len(report.violations)} violations "
    f"(max excess {report.max_excess:.2e})"
)
