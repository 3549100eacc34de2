"""
Every no-signaling box is reproduced by an instruction-set model: a
measure over hidden states, each prescribing one output per input per
party, with the box partitions reading the prescriptions off.  The
catch is the measure's sign.  Boxes admitting a nonnegative measure are
exactly the local ones; the rest need quasi-probabilities.

box_to_model() solves the linear system exactly and flags signed
measures.  is_local() settles the nonnegative question by exact
rational linear programming and always hands back a certificate:
either the convex decomposition into deterministic strategies, or a
Bell-type functional separating the box from the local set.
"""

from fractions import Fraction as F

import agreebox as ab

# A local box: uniform mixture of two agreeing strategies.  Note that
# box_to_model returns one exact solution of the linear system, which
# may use negative weights even when a nonnegative solution exists;
# deciding whether one exists is is_local()'s job.
local = ab.mix_strategies([((0, 0, 0, 0), F(1, 2)), ((1, 1, 1, 1), F(1, 2))])
model = ab.box_to_model(local)
print(f"local mixture model: {model.omega_count} instruction states, "
      f"signed = {model.signed} (this particular solution)")
print(f"roundtrip exact: {ab.model_to_box(model) == local}")

verdict = ab.is_local(local)
print(f"LP verdict: local = {verdict.local}")
print("decomposition:")
for (alpha, beta), w in verdict.weights:
    print(f"  weight {w}: Alice answers {alpha}, Bob answers {beta}")

# The PR box: the unique exact solution has negative weights.
pr = ab.pr_box()
model = ab.box_to_model(pr)
negatives = [w for w in model.measure if w < 0]
print(f"\nPR model signed = {model.signed}, "
      f"{len(negatives)} negative weights, total mass {sum(model.measure)}")
print(f"roundtrip exact: {ab.model_to_box(model) == pr}")

verdict = ab.is_local(pr)
cert = verdict.certificate
print(f"LP verdict: local = {verdict.local}")
print(f"separating functional: box value {cert.box_value} "
      f"> local bound {cert.local_bound}")
print(f"functional value recomputed on the box: {ab.bell_value(pr, cert.coeffs)}")

# The familiar CHSH functional tells the same story.
chsh = ab.correlator_functional({(0, 0): 1, (1, 0): 1, (1, 1): 1, (0, 1): -1})
print(f"\nCHSH on PR: {ab.bell_value(pr, chsh)}, "
      f"deterministic maximum {ab.bell_local_bound(chsh, 2, 2, 2, 2)}")
