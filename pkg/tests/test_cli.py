import json

import pytest

from qphase.cli import bundled, main, model_from_dict, model_to_dict
from qphase.kernel import ProofTree, check_proof
from qphase.models import enumerated
from qphase.phase import is_projective, one_fact, top_fact

C1 = bundled("models/c1.json")
B1 = bundled("models/b1.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestModels:
    def test_validate(self, capsys):
        assert run(capsys, "validate", C1)[:2] == (0, "valid\n")
        code, out, _ = run(capsys, "validate", bundled("models/broken_symmetry.json"))
        assert code == 1 and "symmetry violated at (ep, eq)" in out

    def test_truncated_file(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(open(C1).read()[:40])
        code, _, err = run(capsys, "validate", str(p))
        assert code == 2 and err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", str(tmp_path / "nope.json"))[0] == 2

    def test_facts(self, capsys):
        code, out, _ = run(capsys, "facts", C1)
        lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
        assert code == 0 and len(lines) == 4
        code, out, _ = run(capsys, "facts", B1)
        lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
        assert len(lines) == 6 and lines[-1].split()[-2:] == ["1", "T"]
        assert run(capsys, "facts", bundled("models/classical_pq.json"))[1].count("\n") == 17

    def test_facts_non_projective(self, capsys, tmp_path):
        q = next(q for q in enumerated(3) if one_fact(q) != top_fact(q))
        p = tmp_path / "np.json"
        p.write_text(json.dumps(model_to_dict(q, "np")))
        _, out, _ = run(capsys, "facts", str(p))
        assert "1 == T: False" in out

    def test_recipe_round_trip(self):
        q = model_from_dict(json.load(open(bundled("models/b1_recipe.json"))))
        assert is_projective(q) and q.size == 6
        assert model_from_dict(model_to_dict(q)) == q

    def test_random_model_and_enumerate(self, capsys, tmp_path):
        out_file = tmp_path / "m.json"
        assert run(capsys, "random-model", "--size", "4", "--seed", "3", "--projective",
                   "-o", str(out_file))[0] == 0
        assert run(capsys, "validate", str(out_file))[0] == 0
        assert run(capsys, "enumerate", "3", "--count")[1].strip() == "272"
        assert len(run(capsys, "enumerate", "2")[1].splitlines()) == 8


class TestLogic:
    def test_eval(self, capsys):
        assert run(capsys, "eval", C1, "{a: [e0, ep]}", "~a")[:2] == (0, "{eq, e0}\n")

    def test_check(self, capsys):
        code, out, _ = run(capsys, "check", B1, "{a: ['0', r0], b: ['0', r+]}", "a*b |- b*a")
        assert code == 1 and out.startswith("invalid")
        assert run(capsys, "check", C1, "{a: [e0, ep]}", "|- ~a, a")[0] == 0

    def test_assignment_file(self, capsys, tmp_path):
        p = tmp_path / "asg.json"
        p.write_text(json.dumps({"a": ["e0", "ep"]}))
        assert run(capsys, "eval", C1, str(p), "a")[1] == "{ep, e0}\n"

    @pytest.mark.parametrize("asg,formula", [
        ("{a: [e0, ep, eq]}", "a"), ("{a: [zz]}", "a"), ("{a: [e0]}", "a * | b"),
        ("{a: [e0]}", "b"), ("[1, 2", "a")])
    def test_input_errors(self, capsys, asg, formula):
        assert run(capsys, "eval", C1, asg, formula)[0] == 2

    def test_prove_and_check_proof(self, capsys, tmp_path):
        p = tmp_path / "proof.json"
        assert run(capsys, "prove", "|- ~a, a", "-o", str(p))[0] == 0
        t = ProofTree.from_dict(json.load(open(p)))
        assert t.rule.value == "AxId" and not t.premises
        check_proof(t)
        assert run(capsys, "check-proof", str(p))[:2] == (0, "ok\n")
        assert run(capsys, "prove", "|- a, b", "--depth", "3")[0] == 1

    def test_prove_projective(self, capsys):
        assert run(capsys, "prove", "|- 1, a")[0] == 1
        assert run(capsys, "prove", "|- 1, a", "--mode", "projective")[0] == 0

    def test_check_proof_errors(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"rule": "Ex1", "conclusion": "|- b, a",
                                 "premises": [{"rule": "AxId", "conclusion": "|- a, b"}]}))
        code, out, _ = run(capsys, "check-proof", str(p))
        assert code == 1 and "root/0" in out

    def test_falsify(self, capsys, tmp_path):
        p = tmp_path / "cm.json"
        code, out, _ = run(capsys, "falsify", "a*b |- b*a", "-o", str(p))
        assert code == 0
        cm = json.load(open(p))
        assert cm["certificate"]["probe"] == 413
        assert run(capsys, "falsify", "|- ~a, a", "--budget", "300")[0] == 1


class TestTools:
    def test_harness(self, capsys):
        code, out, _ = run(capsys, "harness", "--rule", "WR", "--trials", "100",
                           "--mode", "projective")
        assert code == 0 and out.strip().endswith("0 violations")
        code, out, _ = run(capsys, "harness", "--rule", "WR", "--trials", "2000")
        assert code == 1

    def test_baby(self, capsys):
        assert run(capsys, "baby", "project", "1,1", "1,0")[1] == "span[(1,0)]\n"
        assert run(capsys, "baby", "complement", "1,0", "--dim", "2")[1] == "span[(0,1)]\n"
        code, out, _ = run(capsys, "baby", "test-lemma1", "--dim", "4", "--trials", "500",
                           "--seed", "7")
        assert code == 0 and "500/500" in out

    def test_baby_bad_vectors(self, capsys):
        assert run(capsys, "baby", "project", "1,1", "1,0,0")[0] == 2
        assert run(capsys, "baby", "project", "1,x", "1,0")[0] == 2
