"""Phase diagram of the two-parameter map family.

Each grid point is classified as positive (double-checked: pure-state
sampling against the Bloch closed form), completely positive (Choi spectrum),
and, where positive but not CP, tagged with the bisected Werner detection
threshold. The numerically found region differs from the nominal one: the
positive region is gamma1 <= 1/2 AND gamma1 + gamma2 <= 1, the map is NCP
only for 2*gamma1 + gamma2 > 1, and the threshold reaches 1/3 (full
entangled range) only where 2*gamma1 + gamma2 = 3/2.
"""

import nmwit

rows = nmwit.phase_scan((0.0, 0.6), (0.0, 1.0), (13, 11), n_samples=4000, seed=0)

print("legend: '.' not positive | 'c' positive and CP | digits = Werner threshold")
print("        (threshold printed as first decimal digit: 3 -> 0.3x, etc.)\n")
g2_values = sorted({round(r.gamma2, 9) for r in rows}, reverse=True)
g1_values = sorted({round(r.gamma1, 9) for r in rows})
by_point = {(round(r.gamma1, 9), round(r.gamma2, 9)): r for r in rows}
for g2 in g2_values:
    cells = []
    for g1 in g1_values:
        r = by_point[(g1, g2)]
        if not r.positive:
            cells.append(".")
        elif r.cp:
            cells.append("c")
        else:
            cells.append(str(int(r.werner_threshold * 10)))
    print(f"  g2={g2:4.1f}  " + " ".join(cells))
print("            " + " ".join(f"{g1:.2f}"[2:4].rjust(1)[:1] for g1 in g1_values))
print("            g1 from 0.00 to 0.60")

print("\nselected points:")
for g1, g2 in ((0.5, 0.5), (0.25, 0.6), (0.5, 0.9), (0.2, 0.2)):
    r = by_point[(g1, g2)]
    print(f"  ({g1:.2f}, {g2:.2f}): positive={r.positive} cp={r.cp} threshold={r.werner_threshold}")
