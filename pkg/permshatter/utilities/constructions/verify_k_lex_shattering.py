import itertools
import logging
import math
from typing import Optional, Union

import numpy as np

from ...config import DEFAULTS
from ...core._patterns import count_distinct, lehmer_codes
from ...core.CubeFamily import CubeFamily
from ...core.LexPermutation import LexPermutation
from ...exceptions import BudgetExceededError
from ...records.LexShatterReport import LexShatterReport

logger = logging.getLogger(__name__)


def verify_k_lex_shattering(family: Union[CubeFamily, list, tuple],
                            k: int,
                            *,
                            weight: Optional[int] = None,
                            mode: str = 'auto',
                            samples: Optional[int] = None,
                            seed: int = 0,
                            budget: Optional[int] = None,
                            ) -> LexShatterReport:
    r"""Checks that a family of lex-permutations of ``[b]^d`` is
    k-lex-shattering: for every set ``I`` of at most ``k`` positions and
    every choice of value sets ``Y_i`` (``2 <= |Y_i| <= k``), each
    combination of orders of the ``Y_i`` is realised by one member, whose
    component ``i`` orders ``Y_i`` that way for all ``i`` in ``I`` at once.

    A group ``(I, (Y_i))`` has weight ``sum(|Y_i| - 1)``; ``weight`` caps
    it (``None`` checks every group). Only groups that cannot be enlarged
    within the cap are checked, since realising all combinations on a group
    realises them on all of its subgroups.

    Basic usage:
        >>> rng = np.random.default_rng(1)
        >>> members = [permshatter.LexPermutation.random(2, 8, rng)
        ...            for _ in range(200)]
        >>> report = permshatter.verify_k_lex_shattering(members, 4)
        >>> report.mode, report.total_constraints
        ('exhaustive', 1120)

    ``mode``:
        ``'exhaustive'`` checks every group and raises
        :exc:`BudgetExceededError` when the number of constraints (group,
        combination) exceeds ``budget``. ``'sampled'`` checks ``samples``
        groups drawn uniformly with a generator seeded by ``seed``.
        ``'auto'`` (default) picks exhaustive within the budget and sampled
        otherwise.

    .. note::

        π-permutation members of a :class:`CubeFamily` are ignored.
    """
    members, b, d = _lex_members(family)
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("'k' must be 'int'")
    if k < 1:
        raise ValueError("'k' must be a positive 'int'")
    if weight is not None and (not isinstance(weight, int) or weight < 1):
        raise ValueError("'weight' must be a positive 'int' or None")
    if mode not in ('auto', 'exhaustive', 'sampled'):
        raise ValueError("'mode' must be 'auto', 'exhaustive' or 'sampled'")
    if budget is None:
        budget = DEFAULTS.constraint_budget
    if samples is None:
        samples = DEFAULTS.lex_samples
    profiles = maximal_profiles(b, d, k, weight)
    groups, total, patterns = count_lex_constraints(b, d, k, weight)
    if mode == 'auto':
        mode = 'exhaustive' if total <= budget else 'sampled'
    if mode == 'exhaustive' and total > budget:
        raise BudgetExceededError(f'{total} lex constraints exceed the budget '
                                  f'of {budget}')
    table = (np.stack([member.rank_table for member in members])
             if members else np.zeros((0, d, b), dtype=np.uint8))
    violation = None
    # fewer members than combinations: the first group already fails
    if groups > 0 and len(members) < patterns:
        violation = _first_group(profiles, b)
        checked = 0
    elif mode == 'exhaustive':
        if b == 2:
            checked, violation = _check_binary(table, profiles)
        else:
            checked, violation = _check_groups(table, b, d, profiles)
    else:
        checked, violation = _check_sampled(table, b, d, profiles, samples,
                                            seed)
    logger.info('%s k-lex check of %d members on [%d]^%d (k=%d, weight=%s): '
                '%d of %d groups, %s', mode, len(members), b, d, k, weight,
                checked, groups, 'passed' if violation is None else 'failed')
    return LexShatterReport(b=b,
                            d=d,
                            k=k,
                            weight=weight,
                            mode=mode,
                            total_constraints=total,
                            checked=checked,
                            violation=violation,
                            samples=samples if mode == 'sampled' else None,
                            seed=seed if mode == 'sampled' else None,
                            )


def maximal_profiles(b: int,
                     d: int,
                     k: int,
                     weight: Optional[int] = None,
                     ) -> list:
    r"""Size profiles ``(|Y_1|, ..., |Y_L|)`` (aligned with the sorted
    positions of ``I``) of the groups that cannot be enlarged.
    """
    positions = min(k, d)
    largest = min(k, b)
    if largest < 2:
        return []
    cap = positions * (largest - 1) if weight is None else weight
    profiles = []

    def extend(prefix: tuple, used: int) -> None:
        if prefix:
            can_grow = used + 1 <= cap and (
                len(prefix) < positions or min(prefix) < largest
            )
            if not can_grow:
                profiles.append(prefix)
        if len(prefix) == positions:
            return
        for size in range(2, largest + 1):
            if used + size - 1 <= cap:
                extend(prefix + (size, ), used + size - 1)

    extend((), 0)
    return profiles


def count_lex_constraints(b: int,
                          d: int,
                          k: int,
                          weight: Optional[int] = None,
                          ) -> tuple:
    r"""Returns ``(groups, constraints, patterns)``: the number of maximal
    groups, the number of (group, combination) constraints, and the largest
    number of combinations a single group requires.

    Basic usage:
        >>> permshatter.count_lex_constraints(2, 32, 4)
        (35960, 575360, 16)
    """
    groups = 0
    constraints = 0
    patterns = 0
    for profile in maximal_profiles(b, d, k, weight):
        count = math.comb(d, len(profile))
        combinations = 1
        for size in profile:
            count *= math.comb(b, size)
            combinations *= math.factorial(size)
        groups += count
        constraints += count * combinations
        patterns = max(patterns, combinations)
    return groups, constraints, patterns


def _lex_members(family) -> tuple:
    if isinstance(family, CubeFamily):
        return list(family.lex_members), family.b, family.d
    if not isinstance(family, (list, tuple)):
        raise TypeError("'family' must be 'CubeFamily', 'list' or 'tuple'")
    if len(family) == 0:
        raise ValueError("'family' must not be empty")
    if not all(isinstance(member, LexPermutation) for member in family):
        raise TypeError("'family' must contain only 'LexPermutation'")
    b, d = family[0].b, family[0].d
    if any((member.b, member.d) != (b, d) for member in family):
        raise ValueError(f'all members must be orders of [{b}]^{d}')
    return list(family), b, d


def _violation(positions, values) -> dict:
    return {'positions': [int(i) + 1 for i in positions],
            'values': [[int(value) + 1 for value in group]
                       for group in values],
            }


def _first_group(profiles, b) -> dict:
    profile = max(profiles, key=lambda sizes: _combinations(sizes))
    return _violation(range(len(profile)),
                      [range(size) for size in profile])


def _combinations(profile) -> int:
    product = 1
    for size in profile:
        product *= math.factorial(size)
    return product


def _check_binary(table, profiles) -> tuple:
    directions = table[:, :, 0].astype(np.int64)
    d = table.shape[1]
    checked = 0
    for profile in profiles:
        length = len(profile)
        target = 2 ** length
        combinations = itertools.combinations(range(d), length)
        while True:
            block = list(itertools.islice(combinations, 2 ** 16))
            if not block:
                break
            positions = np.array(block, dtype=np.int64)
            codes = np.zeros((table.shape[0], len(block)), dtype=np.int64)
            for j in range(length):
                codes = codes * 2 + directions[:, positions[:, j]]
            counts = count_distinct(codes)
            bad = np.flatnonzero(counts < target)
            if bad.size > 0:
                checked += int(bad[0]) + 1
                return checked, _violation(block[bad[0]],
                                           [(0, 1)] * length)
            checked += len(block)
    return checked, None


def _check_groups(table, b, d, profiles) -> tuple:
    checked = 0
    for profile in profiles:
        length = len(profile)
        target = _combinations(profile)
        radices = [math.factorial(size) for size in profile]
        value_sets = [list(itertools.combinations(range(b), size))
                      for size in profile]
        for positions in itertools.combinations(range(d), length):
            codes = [lehmer_codes(table[:, position][:, np.array(values)])
                     for position, values in zip(positions, value_sets)]
            heads = itertools.product(*(range(len(values))
                                        for values in value_sets[:-1]))
            for head in heads:
                base = np.zeros(table.shape[0], dtype=np.int64)
                for j, index in enumerate(head):
                    base = base * radices[j] + codes[j][:, index]
                combined = base[:, None] * radices[-1] + codes[-1]
                counts = count_distinct(combined)
                bad = np.flatnonzero(counts < target)
                if bad.size > 0:
                    checked += int(bad[0]) + 1
                    chosen = [value_sets[j][index]
                              for j, index in enumerate(head)]
                    chosen.append(value_sets[-1][bad[0]])
                    return checked, _violation(positions, chosen)
                checked += len(value_sets[-1])
    return checked, None


def _check_sampled(table, b, d, profiles, samples, seed) -> tuple:
    rng = np.random.default_rng(seed)
    weights = []
    for profile in profiles:
        count = math.comb(d, len(profile))
        for size in profile:
            count *= math.comb(b, size)
        weights.append(count)
    total = sum(weights)
    probabilities = np.array([count / total for count in weights])
    probabilities /= probabilities.sum()
    choices = rng.choice(len(profiles), size=samples, p=probabilities)
    for checked, choice in enumerate(choices, start=1):
        profile = profiles[choice]
        positions = np.sort(rng.choice(d, size=len(profile), replace=False))
        values = [np.sort(rng.choice(b, size=size, replace=False))
                  for size in profile]
        code = np.zeros(table.shape[0], dtype=np.int64)
        for position, group, size in zip(positions, values, profile):
            code = (code * math.factorial(size)
                    + lehmer_codes(table[:, position][:, group]))
        if len(np.unique(code)) < _combinations(profile):
            return checked, _violation(positions, values)
    return samples, None
