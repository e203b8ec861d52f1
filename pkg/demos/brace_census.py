"""Count skew braces on small groups two ways: from regular subgroups of the
holomorph, and from Rota–Baxter operators."""

from brace_forge import braces as br
from brace_forge.catalog import catalog_groups
from brace_forge.errors import BoundExceeded
from brace_forge.rota_baxter import enumerate_rb_operators

print(f"{'group':<10}{'braces':>8}{'classes':>9}{'RB ops':>8}{'RB classes':>12}")
for G in catalog_groups(8):
    if G.order == 1:
        continue
    try:
        braces = br.enumerate_braces(G)
        classes = br.enumerate_braces(G, dedupe=True)
    except BoundExceeded as exc:
        print(f"{G.name:<10}skipped: {exc}")
        continue
    rb_braces = []
    for op in enumerate_rb_operators(G):
        A = br.brace_from_rb(op)
        if not any(br.brace_isomorphic(A, B) is not None for B in rb_braces):
            rb_braces.append(A)
    print(f"{G.name:<10}{len(braces):>8}{len(classes):>9}"
          f"{len(enumerate_rb_operators(G)):>8}{len(rb_braces):>12}")
