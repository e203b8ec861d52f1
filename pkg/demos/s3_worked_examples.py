"""Two Rota–Baxter operators on S3, the cyclic circle groups they induce,
their skew braces and the tower of products built from the first one."""

from brace_forge import braces as br
from brace_forge import cyclic, isomorphic
from brace_forge.multibrace import build_multibrace
from brace_forge.repro import s3_b1, s3_b2, s3_words
from brace_forge.rota_baxter import circle_table
from brace_forge.ybe import solution_from_rb, verify_solution


def show(name, op, gen):
    G = op.group
    names = {v: k for k, v in s3_words(G).items()}
    print(f"{name}:")
    for g in range(G.order):
        print(f"  {names[g]:>7} -> {names[int(op.images[g])]}")
    ct = circle_table(op)
    x, powers = s3_words(G)[gen], []
    for _ in range(6):
        powers.append(names[x])
        x = int(ct[x, s3_words(G)[gen]])
    print(f"  powers of {gen} under the circle product: {', '.join(powers)}")
    A = br.brace_from_rb(op)
    print(f"  circle group cyclic of order 6: {isomorphic(A.circ, cyclic(6)) is not None}")
    print(f"  YBE solution valid: {verify_solution(solution_from_rb(op)).ok}")
    return A


A1 = show("splitting operator for S3 = <s2> A3", s3_b1(), "s1")
A2 = show("homomorphism S3 -> <s1>", s3_b2(), "s2")
print("braces isomorphic:", br.brace_isomorphic(A1, A2) is not None)
print("image sizes:", len(set(s3_b1().images.tolist())), len(set(s3_b2().images.tolist())))

M = build_multibrace(s3_b1(), 2)
print("second product equals the first:", (M.tables[1] == M.tables[2]).all())
