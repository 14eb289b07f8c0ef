# Copyright 2020 The Multisegment Hecke Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# Lint as: python3
"""Checks of the defining relations of the affine Hecke algebra.

The normal form of `algebra.py` rewrites `S_i X^lambda` in one step. Here
every defining relation is evaluated in that normal form, and the one-step
rule is compared with a letter-by-letter rewriting that only uses

  S x = y S - (xi - 1) y,         S y = x S + (xi - 1) y,
  S x^-1 = y^-1 S + (xi - 1) x^-1,  S y^-1 = x^-1 S - (xi - 1) x^-1,

for `S = S_i`, `x = X_i`, `y = X_{i+1}`, together with the commutation of
`S_i` with the other `X_j`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import numpy as np

from multisegment_hecke.hecke import algebra as algebra_lib
from multisegment_hecke.hecke import permutations

# Outcome of `check_relations`.
RelationReport = collections.namedtuple(
    'RelationReport',
    [
        # True when every checked identity holds.
        'passed',
        # Number of identities evaluated.
        'checked',
        # Tuple of strings naming each failing identity and its two sides.
        'failures',
    ])


def _shift(exponents, j, step):
  result = list(exponents)
  result[j] += step
  return tuple(result)


def commute_by_letters(algebra, i, exponents):
  """`S_i X^exponents` by pushing `S_i` through one letter at a time.

  Args:
    algebra: A `HeckeAlgebra`.
    i: 1-based index of `S_i`.
    exponents: Tuple of Python ints, the exponents of `X^exponents`.

  Returns:
    A `HeckeElement`.
  """
  k = i - 1
  xi = algebra.xi
  letters = []
  for j, power in enumerate(exponents):
    letters.extend([(j, 1 if power > 0 else -1)] * abs(power))
  state = {((0,) * algebra.n, True): 1}
  for j, step in letters:
    following = collections.defaultdict(int)
    for (kappa, has_s), c in state.items():
      if not has_s or j not in (k, k + 1):
        following[(_shift(kappa, j, step), has_s)] += c
      elif j == k and step == 1:
        following[(_shift(kappa, k + 1, 1), True)] += c
        following[(_shift(kappa, k + 1, 1), False)] -= (xi - 1) * c
      elif step == 1:
        following[(_shift(kappa, k, 1), True)] += c
        following[(_shift(kappa, k + 1, 1), False)] += (xi - 1) * c
      elif j == k:
        following[(_shift(kappa, k + 1, -1), True)] += c
        following[(_shift(kappa, k, -1), False)] += (xi - 1) * c
      else:
        following[(_shift(kappa, k, -1), True)] += c
        following[(_shift(kappa, k, -1), False)] -= (xi - 1) * c
    state = following
  identity = permutations.identity(algebra.n)
  reflection = permutations.right_multiply(identity, k)
  return algebra.element({(kappa, reflection if has_s else identity): c
                          for (kappa, has_s), c in state.items()})


def _random_element(algebra, rng, terms=2, spread=1):
  perms = permutations.all_permutations(algebra.n)
  chosen = {}
  for _ in range(terms):
    exponents = tuple(int(a) for a in rng.randint(-spread, spread + 1,
                                                  size=algebra.n))
    perm = perms[rng.randint(len(perms))]
    chosen[(exponents, perm)] = int(rng.randint(1, algebra.p))
  return algebra.element(chosen)


def check_relations(n, xi, p, trials=100, seed=0):
  """Evaluates the defining relations of `H_n` in normal form.

  Besides the defining relations, `trials` random instances of
  `S_i X^lambda` are compared with `commute_by_letters`, and `trials // 10`
  random triples (at least one) are checked for associativity.

  #### Examples

  ```python
  check_relations(3, 2, 7).passed  # True
  ```

  Args:
    n: The rank, a positive Python int.
    xi: The parameter, nonzero modulo `p`.
    p: A prime.
    trials: Number of randomized instances.
      Default value: 100.
    seed: Seed of the `np.random.RandomState` drawing the instances.
      Default value: 0.

  Returns:
    A `RelationReport`.

  Raises:
    ValueError: if `p` is not a prime or `xi` vanishes modulo `p`.
  """
  algebra = algebra_lib.HeckeAlgebra(n, xi, p)
  failures = []
  checked = [0]

  def expect(name, lhs, rhs):
    checked[0] += 1
    if lhs != rhs:
      failures.append('{}: {} != {}'.format(name, lhs, rhs))

  one = algebra.one()
  s = {i: algebra.s(i) for i in range(1, n)}
  x = {j: algebra.x(j) for j in range(1, n + 1)}
  for i in s:
    expect('quadratic S_{}'.format(i), (s[i] + one) * (s[i] - algebra.xi * one),
           algebra.zero())
    expect('S_{0} X_{0} S_{0}'.format(i), s[i] * x[i] * s[i],
           algebra.xi * x[i + 1])
    for j in s:
      if abs(i - j) >= 2:
        expect('S_{} S_{}'.format(i, j), s[i] * s[j], s[j] * s[i])
      if j == i + 1:
        expect('braid S_{} S_{}'.format(i, j), s[i] * s[j] * s[i],
               s[j] * s[i] * s[j])
    for j in x:
      if j not in (i, i + 1):
        expect('X_{} S_{}'.format(j, i), x[j] * s[i], s[i] * x[j])
  for j in x:
    inverse = algebra.x(j, -1)
    expect('X_{0} X_{0}^-1'.format(j), x[j] * inverse, one)
    expect('X_{0}^-1 X_{0}'.format(j), inverse * x[j], one)
    for other in x:
      expect('X_{} X_{}'.format(j, other), x[j] * x[other], x[other] * x[j])

  rng = np.random.RandomState(seed)
  if n > 1:
    for _ in range(trials):
      i = int(rng.randint(1, n))
      exponents = tuple(int(a) for a in rng.randint(-3, 4, size=n))
      expect('S_{} X^{}'.format(i, exponents),
             s[i] * algebra.monomial(exponents),
             commute_by_letters(algebra, i, exponents))
  for _ in range(max(1, trials // 10)):
    a, b, c = (_random_element(algebra, rng) for _ in range(3))
    expect('associativity', (a * b) * c, a * (b * c))
  logging.info('Checked %d relations of H_%d at xi=%d over F_%d: %d failed',
               checked[0], n, algebra.xi, p, len(failures))
  return RelationReport(
      passed=not failures, checked=checked[0], failures=tuple(failures))
