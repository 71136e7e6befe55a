"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one pass/fail line per check (visible with ``pytest -rA``
or ``-s``); the same checks back the ``spinsync validate`` command.
"""

import pytest

from spinsync.validate import (
    check_appendix_deformation,
    check_blockade,
    check_epsilon_rule,
    check_fundamental_bound,
    check_oscillator_equivalence,
    check_perturbative_consistency,
    check_phase_oracle,
    check_structural_invariants,
    check_table_one,
)


def run_group(group):
    results = group()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    assert not failed, "\n".join(r.line() for r in failed)


def test_criterion_1_benchmark_table():
    run_group(check_table_one)


def test_criterion_2_fundamental_bound():
    run_group(check_fundamental_bound)


def test_criterion_3_phase_distribution_oracle():
    run_group(check_phase_oracle)


def test_criterion_4_threshold_rule():
    run_group(check_epsilon_rule)


def test_criterion_5_perturbative_consistency():
    run_group(check_perturbative_consistency)


def test_criterion_6_synchronization_blockade():
    run_group(check_blockade)


def test_criterion_7_oscillator_equivalence():
    run_group(check_oscillator_equivalence)


def test_criterion_8_deformation_measure_failure():
    run_group(check_appendix_deformation)


def test_criterion_9_structural_invariants():
    run_group(check_structural_invariants)
