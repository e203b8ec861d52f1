"""The enveloping Rota–Baxter group of a brace: its order, the splitting
operator, the embedding checks and the ζ series."""

from brace_forge import braces as br
from brace_forge import embedding as em
from brace_forge.catalog import get_group

for name in ("S3", "D4", "Q8"):
    for i, A in enumerate(br.enumerate_braces(get_group(name), dedupe=True)):
        T = em.build_tilde(A)
        r = em.verify_embedding(A, T)
        z = em.zeta_series(A, T)
        sizes = [len(s) for s in z.series]
        print(f"{name}#{i}: |G~|={T.group.order} additive={bool(r.additive)} "
              f"multiplicative={bool(r.multiplicative)} commutator={bool(r.commutator)} "
              f"zeta={sizes} strong-left-nilpotent={z.is_strong_left_nilpotent}")

A = br.enumerate_braces(get_group("S3"))[3]
op = em.recover_rb_complete(A)
print("recovered operator on S3 reproduces the brace:", br.brace_from_rb(op) == A)
