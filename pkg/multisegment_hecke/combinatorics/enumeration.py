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
"""Exhaustive enumeration of multisegments.

Multisegments are produced as non-decreasing sequences of candidate segments
(in the canonical segment order), so each multiset is produced exactly once.
Results are returned sorted by `Multisegment.sort_key`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging

from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import periods
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines


def _segments_within(s):
  candidates = []
  for level in s.levels():
    part = s.restrict(level)
    for (_, cls), _ in part.entries:
      length = 1
      while length <= part.size:
        delta = segments.SegmentClass(s.tower, level, cls, length)
        if not part.contains(segments.support(delta)):
          break
        candidates.append(delta)
        length += 1
  return sorted(candidates, key=lambda d: d.sort_key)


def _choose_by_support(candidates, remaining, index, chosen):
  if remaining.is_zero:
    yield list(chosen)
    return
  if index == len(candidates):
    return
  delta = candidates[index]
  covered = segments.support(delta)
  if remaining.contains(covered):
    chosen.append(delta)
    for result in _choose_by_support(candidates, remaining - covered, index,
                                     chosen):
      yield result
    chosen.pop()
  for result in _choose_by_support(candidates, remaining, index + 1, chosen):
    yield result


def enumerate_mult(s):
  """Every multisegment with support `s`.

  #### Examples

  ```python
  tower = Tower.create(INFINITY, 0)
  s = Support.from_points(tower, [(-1, 0), (-1, 1), (-1, 2)])
  [str(m) for m in enumerate_mult(s)]
  # ['[0,2]@sc', '[0,1]@sc + [2,2]@sc', '[1,2]@sc + [0,0]@sc',
  #  '[0,0]@sc + [1,1]@sc + [2,2]@sc']
  ```

  Args:
    s: A `Support`.

  Returns:
    A list of `Multisegment`s, without duplicates, in canonical order.
  """
  candidates = _segments_within(s)
  found = [
      multisegments.Multisegment.from_segments(s.tower, chosen)
      for chosen in _choose_by_support(candidates, s, 0, [])
  ]
  logging.debug('Support %s carries %d multisegments', s, len(found))
  return sorted(found, key=lambda m: m.sort_key)


def enumerate_mult_ap(s):
  """The aperiodic multisegments with support `s`."""
  return [m for m in enumerate_mult(s) if periods.is_aperiodic(m)]


def count_mult(s):
  return len(enumerate_mult(s))


def count_mult_ap(s):
  return len(enumerate_mult_ap(s))


def _choose_by_degree(candidates, remaining, index, chosen):
  if remaining == 0:
    yield list(chosen)
    return
  if index == len(candidates):
    return
  delta = candidates[index]
  if delta.degree <= remaining:
    chosen.append(delta)
    for result in _choose_by_degree(candidates, remaining - delta.degree,
                                    index, chosen):
      yield result
    chosen.pop()
  for result in _choose_by_degree(candidates, remaining, index + 1, chosen):
    yield result


def enumerate_by_degree(tower, degree, starts=None, supercuspidal_only=False):
  """Every multisegment of total degree `degree` on `tower`.

  Args:
    tower: A `Tower`.
    degree: Non-negative Python int.
    starts: Iterable of start classes used on lines of infinite order.
      Ignored on lines of finite order, where every residue is used.
      Default value: None, which means `range(degree)`.
    supercuspidal_only: Python bool. Whether to restrict to level -1.
      Default value: False.

  Returns:
    A list of `Multisegment`s, without duplicates, in canonical order.
  """
  levels = [-1]
  if tower.characteristic != 0 and not supercuspidal_only:
    level = 0
    while tower.level_line(level).degree <= degree:
      levels.append(level)
      level += 1
  candidates = []
  for level in levels:
    line = tower.level_line(level)
    if line.order == cuspidal_lines.INFINITY:
      level_starts = list(range(degree)) if starts is None else list(starts)
    else:
      level_starts = list(range(line.order))
    for start in level_starts:
      length = 1
      while length * line.degree <= degree:
        candidates.append(segments.SegmentClass(tower, level, start, length))
        length += 1
  candidates.sort(key=lambda d: d.sort_key)
  found = [
      multisegments.Multisegment.from_segments(tower, chosen)
      for chosen in _choose_by_degree(candidates, degree, 0, [])
  ]
  logging.info('%s carries %d multisegments of degree %d', tower, len(found),
               degree)
  return sorted(found, key=lambda m: m.sort_key)
