"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │             RADIO                   │
 *  └─────────────────────────────────────┘
 *  First-order radio dissipation model
 *
 *  Per-message transmit/receive/aggregation costs used by the
 *  round engine, and the analytic per-round cluster energy and
 *  optimal cluster count formulas.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - Pure energy functions
 *
 *  Notes:
 *  - d0 comes from RadioParams and is not forced to the
 *    crossover distance sqrt(eps_fs / eps_mp)
 *  - n/k in the analytic forms is a real number
 */
"""

import math

import numpy as np

from core.params import RadioParams


def _check_non_negative(name: str, value: float) -> None:
    if value < 0:
        raise ValueError(f"{name} must be >= 0")


def tx_energy(bits: float, d: float, params: RadioParams) -> float:
    """
     ┌─────────────────────────────────────┐
     │           TX_ENERGY                 │
     └─────────────────────────────────────┘
     Energy to transmit `bits` over distance d

     Parameters:
     - bits: message size (>= 0)
     - d: distance in meters (>= 0)
     - params: radio coefficients

     Returns:
     - bits*e_elec + bits*eps_fs*d^2 below d0,
       bits*e_elec + bits*eps_mp*d^4 at or beyond d0
    """
    _check_non_negative("bits", bits)
    _check_non_negative("d", d)
    if d < params.d0:
        return bits * params.e_elec + bits * params.eps_fs * d ** 2
    return bits * params.e_elec + bits * params.eps_mp * d ** 4


def rx_energy(bits: float, params: RadioParams) -> float:
    """Energy to receive `bits`"""
    _check_non_negative("bits", bits)
    return bits * params.e_elec


def crossover_distance(params: RadioParams) -> float:
    """Distance where the free-space and multipath amplifier terms are equal"""
    return math.sqrt(params.eps_fs / params.eps_mp)


def aggregation_energy(bits: float, message_count: int, params: RadioParams) -> float:
    """Energy to fuse `message_count` messages of `bits` each"""
    _check_non_negative("message_count", message_count)
    return message_count * bits * params.e_da


def ch_round_energy(n: int, k: float, d_bs: float, params: RadioParams) -> float:
    """
     ┌─────────────────────────────────────┐
     │        CH_ROUND_ENERGY              │
     └─────────────────────────────────────┘
     Expected energy of one cluster head in a round

     Receives n/k - 1 member messages, aggregates n/k messages
     (its own included) and uplinks one message over multipath.

     Parameters:
     - n: node count
     - k: cluster count (>= 1, <= n)
     - d_bs: CH distance to the base station (> 0)
     - params: radio coefficients
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k:
        raise ValueError("n must be >= k")
    if not d_bs > 0:
        raise ValueError("d_bs must be > 0")
    L = params.message_bits
    cluster_size = n / k
    return ((cluster_size - 1) * L * params.e_elec
            + cluster_size * L * params.e_da
            + L * params.e_elec
            + L * params.eps_mp * d_bs ** 4)


def nch_round_energy(d_ch: float, params: RadioParams) -> float:
    """Energy of a non-CH node sending one message to its CH (free-space form)"""
    _check_non_negative("d_ch", d_ch)
    return _nch_energy_sq(d_ch ** 2, params)


def _nch_energy_sq(d_ch_sq: float, params: RadioParams) -> float:
    L = params.message_bits
    return L * params.e_elec + L * params.eps_fs * d_ch_sq


def expected_d_ch_sq(region_side: float, k: float) -> float:
    """Expected squared member-to-CH distance, M^2 / (2*pi*k)"""
    if not k > 0:
        raise ValueError("k must be > 0")
    return region_side ** 2 / (2.0 * math.pi * k)


def cluster_round_energy(n: int, k: float, d_bs: float, d_ch_sq: float,
                         params: RadioParams) -> float:
    """
     ┌─────────────────────────────────────┐
     │      CLUSTER_ROUND_ENERGY           │
     └─────────────────────────────────────┘
     Energy depleted in one cluster per round

     E_CH + (n/k) * E_nonCH, the form whose k-fold sum equals
     total_network_energy exactly.
    """
    _check_non_negative("d_ch_sq", d_ch_sq)
    return ch_round_energy(n, k, d_bs, params) + (n / k) * _nch_energy_sq(d_ch_sq, params)


def total_network_energy(n: int, k: float, d_bs: float, d_ch_sq: float,
                         params: RadioParams) -> float:
    """
     ┌─────────────────────────────────────┐
     │      TOTAL_NETWORK_ENERGY           │
     └─────────────────────────────────────┘
     Energy dissipated by the whole network in one round

     L * (2n*e_elec + n*e_da + k*eps_mp*d_bs^4 + n*eps_fs*d_ch_sq)

     Parameters:
     - d_ch_sq: expected squared member-to-CH distance; pass
       expected_d_ch_sq(M, k) for the analytic form
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_non_negative("d_ch_sq", d_ch_sq)
    L = params.message_bits
    return L * (2 * n * params.e_elec
                + n * params.e_da
                + k * params.eps_mp * d_bs ** 4
                + n * params.eps_fs * d_ch_sq)


def optimal_cluster_count(n: int, region_side: float, d_bs: float,
                          params: RadioParams) -> float:
    """
     ┌─────────────────────────────────────┐
     │     OPTIMAL_CLUSTER_COUNT           │
     └─────────────────────────────────────┘
     Stationary point of total_network_energy in k

     sqrt(n / 2pi) * sqrt(eps_fs / eps_mp) * M / d_bs^2, with
     d_ch_sq = M^2 / (2*pi*k).
    """
    if n < 1 or not region_side > 0 or not d_bs > 0:
        raise ValueError("n, region_side and d_bs must be positive")
    return (math.sqrt(n / (2.0 * math.pi))
            * crossover_distance(params)
            * region_side / d_bs ** 2)


def grid_optimal_cluster_count(n: int, region_side: float, d_bs: float,
                               params: RadioParams, step: float = 0.25) -> float:
    """Brute-force argmin of total_network_energy over k in [step, n]"""
    ks = np.arange(step, n + step / 2.0, step)
    L = params.message_bits
    energies = L * (2 * n * params.e_elec
                    + n * params.e_da
                    + ks * params.eps_mp * d_bs ** 4
                    + n * params.eps_fs * region_side ** 2 / (2.0 * np.pi * ks))
    return float(ks[int(np.argmin(energies))])


def optimal_probability(n: int, k_opt: float) -> float:
    """CH probability k_opt / n, clamped to [0, 1]"""
    if n < 1:
        raise ValueError("n must be >= 1")
    return min(1.0, max(0.0, k_opt / n))
