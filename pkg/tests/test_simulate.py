import pytest
from hypothesis import given
from hypothesis import strategies as st

from zecap import (
    Bits,
    ChannelParams,
    Code,
    PreconditionError,
    decode,
    forbidden_run_code,
    output_membership,
    pairwise_block_code,
    possible_outputs,
    sample_output,
    zero_error_trial,
)


def make_code(*words):
    return Code.from_words([Bits(w) for w in words])


def test_sample_noiseless_is_identity():
    for seed in (0, 1, 99):
        assert sample_output(ChannelParams(1, 1), Bits("0110"), seed) == Bits("0110")


def test_sample_deterministic_steps():
    assert sample_output(ChannelParams(2, 1), Bits("00"), seed=5) == Bits("00")


def test_sample_lands_in_output_set():
    params = ChannelParams(2, 1)
    outputs = possible_outputs(params, Bits("0011")).members
    seen = {sample_output(params, Bits("0011"), seed) for seed in range(64)}
    assert seen <= outputs
    assert seen == {Bits("0001"), Bits("0011")}


def test_sample_replays_bit_exactly():
    params = ChannelParams(2, 3)
    x = Bits("010011001")
    assert sample_output(params, x, 1234) == sample_output(params, x, 1234)


@given(
    st.tuples(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4)),
    st.text(alphabet="01", min_size=1, max_size=10),
    st.integers(min_value=0, max_value=2**32),
)
def test_sample_membership_property(raw_params, s, seed):
    params = ChannelParams(*raw_params)
    x = Bits(s)
    assert output_membership(params, x, sample_output(params, x, seed))


def test_coin_frequency_close_to_half():
    # input 0101... under (2, 1) flips a coin at every step after the first
    params = ChannelParams(2, 1)
    x = Bits("01" * 8)
    coins = 0
    flips = 0
    for seed in range(700):
        y = sample_output(params, x, seed)
        for t in range(2, len(x) + 1):
            flips += 1
            coins += y.at(t)
    n_half = flips / 2
    sigma = (flips * 0.25) ** 0.5
    assert abs(coins - n_half) <= 3 * sigma


def test_decode_examples():
    params = ChannelParams(2, 1)
    code = pairwise_block_code(4)
    result = decode(params, code, Bits("0001"))
    assert result.status == "ok"
    assert result.word == Bits("0011")

    ambiguous = decode(params, make_code("00", "01"), Bits("00"))
    assert ambiguous.status == "ambiguous"
    assert ambiguous.word is None

    nothing = decode(ChannelParams(1, 1), make_code("11"), Bits("00"))
    assert nothing.status == "none"


def test_decode_noiseless_identity():
    code = make_code("00", "01", "10")
    result = decode(ChannelParams(1, 1), code, Bits("01"))
    assert result.status == "ok" and result.word == Bits("01")


def test_decode_length_mismatch():
    with pytest.raises(ValueError):
        decode(ChannelParams(1, 1), make_code("00"), Bits("0"))


def test_trial_verified_code_never_fails():
    report = zero_error_trial(ChannelParams(2, 1), pairwise_block_code(6), 300, seed=11)
    assert report.trials == 300
    assert report.failures == 0
    assert report.ambiguity_examples == ()


def test_trial_refuses_unverified_code():
    with pytest.raises(PreconditionError):
        zero_error_trial(ChannelParams(1, 2), make_code("00", "01"), 10, seed=0)


def test_trial_force_surfaces_failures():
    report = zero_error_trial(
        ChannelParams(1, 2), make_code("00", "01"), 1000, seed=0, force=True
    )
    assert report.failures > 0
    assert 0 < len(report.ambiguity_examples) <= 10


def test_trial_replay_is_identical():
    params = ChannelParams(4, 4)
    code = forbidden_run_code(8, 3)
    first = zero_error_trial(params, code, 500, seed=42)
    second = zero_error_trial(params, code, 500, seed=42)
    assert first == second


def test_report_json_shape():
    report = zero_error_trial(ChannelParams(2, 1), pairwise_block_code(4), 50, seed=3)
    payload = report.to_json_dict()
    assert payload["trials"] == 50
    assert payload["failures"] == 0
    assert payload["seed"] == 3
    assert "generator" in payload
    assert payload["examples"] == []
