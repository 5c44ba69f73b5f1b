"""Regenerate the bundled proof fixtures under src/qphase/data/proofs/."""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "qphase" / "data" / "proofs"


def node(rule, conclusion, *premises):
    return {"rule": rule, "conclusion": conclusion, "premises": list(premises)}


AX = node("AxId", "|- ~a, a")
AXB = node("AxId", "|- ~b, b")
EX = node("Ex1", "|- a, ~a", AX)
EXB = node("Ex1", "|- b, ~b", AXB)
TENSOR = node("TensorR", "|- ~a, ~b, (a * b)", EX, EXB)

GOOD = {"axid.json": AX, "ex1_axid.json": EX, "tensor.json": TENSOR}

# (tree, expected path, expected rule, expected location)
MALFORMED = [
    (node("AxId", "|- a, a"), [], "AxId", "conclusion formula 0"),
    (node("AxId", "|- ~a, a, b"), [], "AxId", "conclusion"),
    (node("AxId", "|- ~a, a", AX), [], "AxId", "premises"),
    (node("Ex1", "|- a, ~a"), [], "Ex1", "premises"),
    (node("Ex2", "|- a, ~a", AX), [], "Ex2", "premise 0"),
    (node("Ex1", "|- ~a, a", AX), [], "Ex1", "conclusion formula 0"),
    (node("Ex1", "|- b, a", node("AxId", "|- a, b")), [0], "AxId", "conclusion formula 0"),
    (node("TensorR", "|- ~b, ~a, (a * b)", EX, EXB), [], "TensorR", "conclusion formula 0"),
    (node("TensorR", "|- (a * b), ~a, ~b", EX, EXB), [], "TensorR", "conclusion formula 0"),
    (node("TensorR", "|- ~a, ~b, (b * a)", EX, EXB), [], "TensorR", "conclusion formula 2"),
    (node("TensorR", "|- ~a, ~b, (a * b)", EX), [], "TensorR", "premises"),
    (node("TensorR", "|- ~a, ~b, (a * b)", EX, node("Ex1", "|- b, ~b", AX)), [1], "Ex1",
     "conclusion formula 0"),
    (node("ParR", "|- (a | ~a)", AX), [], "ParR", "conclusion formula 0"),
    (node("ParR", "|- (~a | a), b", AX), [], "ParR", "conclusion"),
    (node("WithR", "|- (a & b), ~a", EX, EXB), [], "WithR", "premise 1 formula 1"),
    (node("Plus1", "|- (b + a), ~a", EX), [], "Plus1", "conclusion formula 0"),
    (node("Plus2", "|- (a + b), ~a", EX), [], "Plus2", "conclusion formula 0"),
    (node("BotR", "|- 1, a", node("AxOne", "|- 1")), [], "BotR", "conclusion formula 0"),
    (node("Cut", "|- a, a", EX, EX), [], "Cut", "premise 1 formula 0"),
    (node("WR", "|- 1, a", node("AxOne", "|- 1")), [], "WR", "rule"),
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, tree in GOOD.items():
        (OUT / name).write_text(json.dumps(tree, indent=1) + "\n")
    cases = [{"tree": t, "path": p, "rule": r, "where": w} for t, p, r, w in MALFORMED]
    (OUT / "malformed.json").write_text(json.dumps(cases, indent=1) + "\n")
    print(f"wrote {len(GOOD)} proofs and {len(cases)} malformed cases to {OUT}")


if __name__ == "__main__":
    main()
