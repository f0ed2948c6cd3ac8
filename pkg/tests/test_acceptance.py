"""The acceptance battery as a test module.

Each test runs one criterion at its stated tolerance and time limit and
prints the one-line verdict; the suite fails if any criterion fails or
overruns its limit.
"""

from spectral_stokes import acceptance


def _check(result):
    print(result.line())
    assert result.passed, result.details
    assert result.in_time, f"{result.name} took {result.seconds:.1f}s, " \
                           f"limit {result.limit:.0f}s"


def test_criterion_1_size2_table():
    _check(acceptance.criterion_size2_table())


def test_criterion_2_line3():
    _check(acceptance.criterion_line3())


def test_criterion_3_power_identity():
    _check(acceptance.criterion_power_identity())


def test_criterion_4_chain_grid():
    _check(acceptance.criterion_chain_grid())


def test_criterion_5_e12():
    _check(acceptance.criterion_e12())


def test_criterion_6_signature_law():
    _check(acceptance.criterion_signature_law())


def test_criterion_7_grid3():
    _check(acceptance.criterion_grid3())


def test_criterion_8_class_round_trip():
    _check(acceptance.criterion_class_round_trip())


def test_criterion_9_properties():
    _check(acceptance.criterion_properties())
