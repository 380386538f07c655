import pytest

import automin

PARITY = """kind: dfa
input: a
states: q0 q1
init: q0
final: q1
q0 a -> q1
q1 a -> q0
"""

REDUNDANT = """kind: dfa
input: a b
states: q0 q1 q2 q3
init: q0
final: q1 q3
q0 a -> q1
q0 b -> q2
q1 a -> q3
q1 b -> q2
q2 a -> q1
q2 b -> q2
q3 a -> q3
q3 b -> q2
"""

ENDS_A = """kind: dfa
input: a b
states: q0 q1
init: q0
final: q1
q0 a -> q1
q0 b -> q0
q1 a -> q1
q1 b -> q0
"""

ENDS_AB = """kind: nfa
input: a b
states: q0 q1 q2
init: q0
final: q2
q0 a -> q0
q0 a -> q1
q0 b -> q0
q1 b -> q2
"""

DUPLICATE = """kind: subseq
input: a
output: a
states: q0 q1 q2
init: q0 / _
final: q0 / _
final: q1 / _
final: q2 / _
q0 a -> a q1
q1 a -> a q2
q2 a -> a q0
"""

NOWHERE = """kind: subseq
input: a b
output: x y
states:
init: -
"""


def test_minimize_is_canonical_and_idempotent():
    small = automin.minimize(REDUNDANT)
    assert small == ENDS_A
    assert automin.minimize(small) == small
    assert automin.state_count(small) == 2


def test_minimize_collapses_duplicated_transducer_states():
    small = automin.minimize(DUPLICATE)
    assert automin.state_count(small) == 1
    assert automin.equivalent(small, DUPLICATE)


def test_acceptors_run_words():
    assert automin.accepts(PARITY, "a")
    assert not automin.accepts(PARITY, "aa")
    assert not automin.accepts(PARITY, "_")
    assert automin.accepts(ENDS_AB, "ab")
    assert not automin.accepts(ENDS_AB, "aba")


def test_transducers_run_words():
    assert automin.transduce(DUPLICATE, "aaa") == "aaa"
    assert automin.transduce(DUPLICATE, "_") == "_"
    assert automin.transduce(NOWHERE, "ab") is None


def test_equivalence_and_witness():
    assert automin.equivalent(REDUNDANT, ENDS_A)
    assert automin.witness(REDUNDANT, ENDS_A) is None

    w = automin.witness(ENDS_A, ENDS_AB)
    assert w == "a"
    assert automin.accepts(ENDS_A, w) != automin.accepts(ENDS_AB, w)


def test_determinization_family():
    direct = automin.brzozowski(ENDS_AB)
    assert automin.state_count(direct) == 3
    assert automin.equivalent(direct, automin.determinize(ENDS_AB))
    assert automin.canonical(direct) == direct

    backward = automin.codeterminize(ENDS_AB)
    assert backward.startswith("kind: nfa")


def test_errors_are_python_exceptions():
    with pytest.raises(RuntimeError, match="unknown kind"):
        automin.minimize("kind: moore\n")
    with pytest.raises(RuntimeError, match="line 6"):
        automin.minimize(
            "kind: dfa\ninput: a\nstates: q0\ninit: q0\nfinal: q0\n"
            "q0 a -> q9\n"
        )
    with pytest.raises(ValueError):
        automin.accepts(PARITY, "z")
    with pytest.raises(ValueError):
        automin.accepts(DUPLICATE, "a")
    with pytest.raises(ValueError):
        automin.transduce(PARITY, "a")
    with pytest.raises(ValueError):
        automin.equivalent(PARITY, DUPLICATE)
