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
"""Periods and aperiodic multisegments.

A period on a line is a multisegment
`[a, b] + [a + 1, b + 1] + ... + [a + n - 1, b + n - 1]` with
`n = e * l**r`, `r >= 0`, where `e` is the invariant of the line. A
multisegment is aperiodic when it contains no period. A period with `r > 0`
contains one with `r = 0`, so only those are searched for. In characteristic
0 every multisegment is aperiodic.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines


def make_period(tower, level, start, length, r=0):
  """The period `sum_k [start + k, start + k + length - 1]` on `level`.

  Args:
    tower: A `Tower` of nonzero characteristic.
    level: Level of the line, -1 or `r' >= 0`.
    start: First start class.
    length: Common length of the segments.
    r: Non-negative Python int; the period has `e * l**r` segments.
      Default value: 0.

  Returns:
    A `Multisegment`.

  Raises:
    ValueError: in characteristic 0.
  """
  if tower.characteristic == 0:
    raise ValueError('Characteristic-0 lines have no periods')
  count = tower.level_line(level).e * tower.characteristic**r
  return multisegments.Multisegment.from_segments(tower, [
      segments.SegmentClass(tower, level, start + k, length)
      for k in range(count)
  ])


def periods(m):
  """Every period with `r = 0` contained in `m`, in canonical order."""
  tower = m.tower
  if tower.characteristic == 0:
    return []
  found = []
  for level in sorted({delta.level for delta, _ in m.entries}):
    line = tower.level_line(level)
    lengths = sorted({d.length for d, _ in m.entries if d.level == level})
    for length in lengths:
      if line.order == 1:
        delta = segments.SegmentClass(tower, level, 0, length)
        if m.multiplicity(delta) >= line.e:
          found.append(make_period(tower, level, 0, length))
      elif all(
          m.multiplicity(segments.SegmentClass(tower, level, a, length))
          for a in range(line.order)):
        found.append(make_period(tower, level, 0, length))
  return found


def find_period(m):
  """A period contained in `m`, or None when `m` is aperiodic.

  #### Examples

  ```python
  tower = Tower.create(1, 2)
  point = SegmentClass(tower, -1, 0, 1)
  str(find_period(Multisegment(tower, [(point, 2)])))  # '2*[0,0]@sc'
  find_period(Multisegment(tower, [(point, 1)]))  # None
  ```

  Args:
    m: A `Multisegment`.

  Returns:
    The first period of `periods(m)`, or None.
  """
  found = periods(m)
  return found[0] if found else None


def is_aperiodic(m):
  if m.tower.base.e == cuspidal_lines.INFINITY:
    return True
  return find_period(m) is None
