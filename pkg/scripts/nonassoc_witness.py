"""Print the two non-associativity witnesses: subspaces of Q^2 and facts of B1."""

from qphase.linalg import project_subspace, span
from qphase.models import ray_model
from qphase.phase import make_fact, one_fact, tensor


def subspace_witness() -> None:
    A, B, C = span([(1, 0)]), span([(1, 1)]), span([(0, 1)])
    print("subspaces of Q^2, A = span(1,0), B = span(1,1), C = span(0,1)")
    print(f"  (A.B).C = {project_subspace(project_subspace(A, B), C)}")
    print(f"  A.(B.C) = {project_subspace(A, project_subspace(B, C))}")


def fact_witness() -> None:
    q = ray_model([(1, 0), (0, 1), (1, 1), (1, -1)], 2)
    # ray_model names rays r0..r3; r2 = span(1,1), r3 = span(1,-1)
    F, G, H = (make_fact(q, ["0", r]) for r in ("r0", "r2", "r1"))
    print("facts of the four-ray model, F = {0,r0}, G = {0,r(1,1)}, H = {0,r1}")
    print(f"  (F*G)*H = {tensor(tensor(F, G), H)!r}")
    print(f"  F*(G*H) = {tensor(F, tensor(G, H))!r}")
    print(f"  F*1     = {tensor(F, one_fact(q))!r}  (F = {F!r})")


if __name__ == "__main__":
    subspace_witness()
    fact_witness()
