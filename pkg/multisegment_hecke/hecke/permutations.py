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
"""Permutations in one-line notation, reduced words and parabolic cosets.

A permutation `w` of `{0, ..., n-1}` is the tuple `(w(0), ..., w(n-1))`.
The simple transposition `s_k` swaps `k` and `k + 1`; multiplying by `s_k` on
the right swaps the entries at positions `k` and `k + 1`, multiplying on the
left swaps the values `k` and `k + 1`. Indices `k` are 0-based here, the
generator `S_{k+1}` of the Hecke algebra corresponds to `s_k`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools


def identity(n):
  return tuple(range(n))


def inverse(perm):
  """The inverse permutation.

  #### Examples

  ```python
  inverse((1, 2, 0))  # (2, 0, 1)
  ```
  """
  result = [0] * len(perm)
  for position, value in enumerate(perm):
    result[value] = position
  return tuple(result)


def compose(x, y):
  """The product `xy`: apply `y`, then `x`."""
  if len(x) != len(y):
    raise ValueError('Cannot compose permutations of sizes {} and {}'.format(
        len(x), len(y)))
  return tuple(x[j] for j in y)


def right_multiply(perm, k):
  """`perm * s_k`."""
  result = list(perm)
  result[k], result[k + 1] = result[k + 1], result[k]
  return tuple(result)


def left_multiply(k, perm):
  """`s_k * perm`."""
  return tuple(k + 1 if v == k else k if v == k + 1 else v for v in perm)


def is_right_descent(perm, k):
  """Whether `l(perm * s_k) < l(perm)`."""
  return perm[k] > perm[k + 1]


def length(perm):
  """The Coxeter length, that is the number of inversions."""
  return sum(1 for i, j in itertools.combinations(range(len(perm)), 2)
             if perm[i] > perm[j])


def reduced_word(perm):
  """The lexicographically smallest reduced word of `perm`.

  The smallest left descent is peeled off repeatedly.

  #### Examples

  ```python
  reduced_word((2, 1, 0))  # (0, 1, 0)
  reduced_word((1, 2, 0))  # (0, 1)
  ```

  Args:
    perm: A permutation in one-line notation.

  Returns:
    A tuple `(k_1, ..., k_l)` of 0-based indices with
    `perm = s_{k_1} ... s_{k_l}` and `l = length(perm)`.
  """
  word = []
  while True:
    positions = inverse(perm)
    descents = [k for k in range(len(perm) - 1)
                if positions[k] > positions[k + 1]]
    if not descents:
      return tuple(word)
    word.append(descents[0])
    perm = left_multiply(descents[0], perm)


def all_permutations(n):
  """All permutations of `n` letters, by length then lexicographically."""
  return sorted(itertools.permutations(range(n)),
                key=lambda perm: (length(perm), perm))


def _blocks(alpha):
  """The block index of each letter for the composition `alpha`."""
  if any(part < 1 for part in alpha):
    raise ValueError('Composition parts must be positive, got {}'.format(
        tuple(alpha)))
  labels = []
  for block, part in enumerate(alpha):
    labels.extend([block] * part)
  return labels


def is_minimal_coset_representative(perm, alpha):
  """Whether `perm` is the shortest element of its coset `W_alpha perm`."""
  labels = _blocks(alpha)
  if len(labels) != len(perm):
    raise ValueError('Composition {} does not match {} letters'.format(
        tuple(alpha), len(perm)))
  positions = inverse(perm)
  return all(positions[k] < positions[k + 1]
             for k in range(len(perm) - 1) if labels[k] == labels[k + 1])


def minimal_coset_representatives(alpha):
  """The minimal length representatives of `W_alpha \\ W`.

  `W_alpha` is the parabolic subgroup generated by the `s_k` with `k` and
  `k + 1` in the same block of `alpha`. A permutation is minimal in its coset
  when its inverse is increasing on every block.

  #### Examples

  ```python
  minimal_coset_representatives((1, 2))
  # [(0, 1, 2), (1, 0, 2), (1, 2, 0)]
  ```

  Args:
    alpha: A composition, a sequence of positive Python ints.

  Returns:
    A list of permutations of `sum(alpha)` letters, ordered by length then
    lexicographically. Its size is the multinomial coefficient of `alpha`.
  """
  n = sum(alpha)
  return [perm for perm in all_permutations(n)
          if is_minimal_coset_representative(perm, alpha)]


def coset_decomposition(perm, alpha):
  """Writes `perm = v * u` with `v` in `W_alpha` and `u` minimal in `W_alpha u`.

  Args:
    perm: A permutation in one-line notation.
    alpha: A composition of `len(perm)`.

  Returns:
    A tuple `(v, u)` of permutations with `compose(v, u) == perm` and
    `length(perm) == length(v) + length(u)`.
  """
  labels = _blocks(alpha)
  if len(labels) != len(perm):
    raise ValueError('Composition {} does not match {} letters'.format(
        tuple(alpha), len(perm)))
  values_by_block = {}
  for value, block in enumerate(labels):
    values_by_block.setdefault(block, []).append(value)
  taken = {block: 0 for block in values_by_block}
  minimal = []
  for value in perm:
    block = labels[value]
    minimal.append(values_by_block[block][taken[block]])
    taken[block] += 1
  minimal = tuple(minimal)
  return compose(perm, inverse(minimal)), minimal
