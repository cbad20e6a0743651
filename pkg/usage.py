#!/usr/bin/env python3
"""
Example usage of the conifold potential and its difference-equation checks
"""

import io

from arith.exact_arith import bernoulli, gw_genus_coeff
from checks.difference_checker import DifferenceChecker
from conifold.gw_conifold import coefficient_closed_form, potential
from gv.gv_resummation import GVResummation, load_gv_dataset
from polylog.polylog_series import polylog_negative_closed


def example_1_scalars_and_polylogs():
    """Example 1: Bernoulli numbers, genus coefficients and a closed-form polylog"""
    print("=== Example 1: Scalars ===")
    print(f"  B_4 = {bernoulli(4)}")
    print(f"  c_1, c_2, c_3 = {gw_genus_coeff(1)}, {gw_genus_coeff(2)}, {gw_genus_coeff(3)}")
    print(f"  Li_-2(q) = {polylog_negative_closed(2).render()}")


def example_2_potential():
    """Example 2: Build the potential and compare one degree with its closed form"""
    print("\n=== Example 2: Potential ===")
    pot = potential(3, 4)
    print(pot.render_table())
    closed = coefficient_closed_form(2, 3)
    print(f"  f_2 from (1/2)(2 sin(λ))^-2: {closed.render()}")
    print(f"  agrees with the table: {closed == pot.per_degree[2]}")


def example_3_checks():
    """Example 3: Run the exact checks"""
    print("\n=== Example 3: Checks ===")
    checker = DifferenceChecker()
    print(checker.check_generating_identity(20).render())
    print(checker.check_theorem(6, 20).render())
    print(checker.check_recursion_range(6, 20).render())

    # The recursion alone recovers the higher genera from Li_3
    solved = checker.solve_recursion(2, 5)
    print(f"  genus 2 from the recursion: {solved[2].render()}")


def example_4_gv_resummation():
    """Example 4: Genus-zero GV resummation for two curve classes"""
    print("\n=== Example 4: GV resummation ===")
    dataset = load_gv_dataset(io.BytesIO(b'{"classes":[{"label":"a","n0":1},{"label":"b","n0":5}]}'))
    resummation = GVResummation(dataset)
    print(resummation.resum_genus0(2, 3).render())
    print(resummation.check_corollary("a", 6, 20).render())


if __name__ == "__main__":
    print("GW Potential Difference Equations - Usage Examples")
    print("=" * 50)

    example_1_scalars_and_polylogs()
    example_2_potential()
    example_3_checks()
    example_4_gv_resummation()
