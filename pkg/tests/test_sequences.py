from matlc.sequences import (
    analyze_sequence,
    has_internal_zeros,
    is_log_concave,
    is_nonnegative,
    is_sign_alternating,
    is_strictly_log_concave,
    log_concavity_violation,
    strip_trailing_zeros,
)


def test_log_concavity():
    assert is_log_concave((1, 3, 3, 1))
    assert is_log_concave((1, 2, 4))
    assert not is_strictly_log_concave((1, 2, 4))
    assert not is_log_concave((1, 1, 2))
    assert log_concavity_violation((1, 1, 2)) == 1
    assert is_strictly_log_concave((1, 6, 11, 6))
    assert is_strictly_log_concave((5,))
    assert is_strictly_log_concave(())


def test_internal_zeros():
    assert has_internal_zeros((1, 0, 1))
    assert not has_internal_zeros((0, 1, 1, 0))
    assert not has_internal_zeros((1, 1, 0))
    assert not has_internal_zeros((0, 0))


def test_sign_alternation():
    assert is_sign_alternating((1, -3, 2))
    assert is_sign_alternating((1, -3, 2, 0, 0))
    assert not is_sign_alternating((1, 3, 2))
    assert not is_sign_alternating((-1, 3))
    assert not is_sign_alternating((1, 0, 1))
    assert not is_sign_alternating((0, 0))


def test_helpers():
    assert is_nonnegative((0, 1))
    assert not is_nonnegative((1, -1))
    assert strip_trailing_zeros((1, -3, 2, 0)) == (1, -3, 2)


def test_analyze_sequence():
    verdict = analyze_sequence((1, -6, 11, -6))
    assert verdict.log_concave
    assert verdict.strictly_log_concave
    assert verdict.sign_alternating
    assert not verdict.nonnegative
    assert verdict.first_violation is None
    assert analyze_sequence((1, 1, 2)).to_json()["first_violation"] == 1
