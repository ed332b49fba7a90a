"""Extremal BSC mixtures: the machinery inside the two-dimensional bound.

Maximizing a node's output noise over all channels with given (CB, SB) is a
tiny linear program over BSC mixtures.  The check node has a universal
two-atom maximizer (with a dual certificate proving optimality); the
variable node's maximizer moves with the partner channel, so a three-atom
family that dominates the whole envelope is used instead.  A brute-force
grid LP verifies every closed form.
"""

from bpbounds import (check_node_dual, check_node_maximizer, check_transfer,
                      lp_oracle, s_envelope, variable_node_pointwise_maximizer,
                      variable_node_upper_family, variable_transfer)

cb_in, sb_in = 0.4, 0.2
print(f"input constraints: E[a] <= {cb_in}, E[a^2] <= {sb_in}\n")

fam = check_node_maximizer(cb_in, sb_in)
print("check-node maximizer dP*:", [(round(w, 4), round(a, 4))
                                    for w, a in fam.atoms])
print(f"  moments: E[a] = {fam.moment_a():.4f}, E[a^2] = {fam.moment_a2():.4f}")
for b in (0.3, 0.9):
    primal = sum(w * float(check_transfer(a, b)) for w, a in fam.atoms)
    y0, y1, y2 = check_node_dual(cb_in, sb_in, b)
    dual = y0 + y1 * cb_in + y2 * sb_in
    lp = lp_oracle(lambda a: check_transfer(a, b), cb_in, sb_in, 400)
    print(f"  b={b}: primal {primal:.6f} = dual {dual:.6f}; grid LP {lp:.6f}")

print()
ub = variable_node_upper_family(cb_in, sb_in)
print("variable-node bounding family dP**:",
      [(round(w, 4), round(a, 4)) for w, a in ub.atoms])
print(f"  E[a] = {ub.moment_a():.4f} (may exceed {cb_in}: dP** bounds, it is")
print("  not necessarily a feasible channel); E[a^2] =",
      f"{ub.moment_a2():.4f} exactly")

print("\n  b     envelope   dP** value   pointwise maximizer")
for b in (0.2, 0.45, 0.8):
    env = s_envelope(cb_in, sb_in, b)
    dom = sum(w * float(variable_transfer(a, b)) for w, a in ub.atoms)
    pw = variable_node_pointwise_maximizer(cb_in, sb_in, b)
    pw_val = sum(w * float(variable_transfer(a, b)) for w, a in pw.atoms)
    print(f"  {b:.2f}  {env:9.6f}  {dom:10.6f}   "
          f"{[(round(w, 3), round(a, 3)) for w, a in pw.atoms]} -> {pw_val:.6f}")
print("\nThe dP** column always dominates the envelope; the pointwise")
print("maximizer attains it exactly but changes shape with b.")
