import random

import pytest

from qphase.countermodel import falsify
from qphase.harness import instantiate, model_pool, run_trial, soundness_harness
from qphase.kernel import Mode, PLAIN_RULES, RuleTag
from qphase.models import nth_qstructure
from qphase.phase import is_projective
from qphase.syntax import parse_sequent as ps, sequent_valid


class TestHarness:
    @pytest.mark.parametrize("rule", PLAIN_RULES, ids=lambda r: r.value)
    def test_plain_rules_sound(self, rule):
        report = soundness_harness(rule, 200, seed=1)
        assert report.ok, report.violations[:1]
        assert report.trials == 200 and report.vacuous < 200

    def test_weakening_projective(self):
        assert soundness_harness(RuleTag.WR, 300, seed=2, mode="projective").ok

    def test_weakening_plain_violated_and_replayable(self):
        report = soundness_harness(RuleTag.WR, 10_000, seed=0, mode="plain", stop_at_first=True)
        assert not report.ok
        cx = report.violations[0]
        assert cx.replay()
        assert not is_projective(cx.structure)
        d = cx.to_dict()
        assert d["model"]["kind"] in ("enumerated", "random")

    def test_trials_replay_from_seed(self):
        pool = model_pool(False, 0)
        a = run_trial(RuleTag.TensorR, 1234, pool)
        b = run_trial(RuleTag.TensorR, 1234, pool)
        assert a == b

    def test_projective_pool(self):
        pool = model_pool(True, 3)
        assert all(is_projective(q) for _, q in pool.enumerated + pool.sampled)

    def test_bad_trials(self):
        with pytest.raises(ValueError):
            soundness_harness(RuleTag.AxId, 0)

    def test_summary(self):
        r = soundness_harness(RuleTag.AxOne, 5)
        assert r.summary() == "AxOne [plain]: 5 trials, 0 vacuous, 0 violations"

    def test_instances_have_schema_arity(self):
        rng = random.Random(0)
        assert len(instantiate(RuleTag.Cut, rng)[0]) == 2
        assert instantiate(RuleTag.AxOne, rng) == ([], ps("|- 1"))


class TestFalsify:
    def test_finds_commutativity_countermodel(self):
        out = falsify(ps("a*b |- b*a"), 6, seed=0, budget=10_000)
        cm = out.countermodel
        assert cm is not None and cm.replay()
        assert cm.probe == 413
        assert cm.certificate["phase"] == "enumerated"
        q = nth_qstructure(cm.certificate["size"], cm.certificate["index"])
        assert q == cm.structure

    @pytest.mark.parametrize("text", ["|- ~a, a", "a & b |- a", "a |- a + b"])
    def test_valid_sequents_inconclusive(self, text):
        out = falsify(ps(text), 6, seed=0, budget=2_000)
        assert out.inconclusive and out.probes == 2_000

    def test_random_phase_certificate(self):
        # associativity of tensor fails only past the enumerated phase budget
        out = falsify(ps("(a*b)*c |- a*(b*c)"), 6, seed=3, budget=4_000, enum_max_size=1)
        cm = out.countermodel
        assert cm is not None and cm.replay()
        assert not sequent_valid(cm.structure, cm.assignment, cm.sequent)
