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
"""Multisegments and their calculus.

A multisegment is a finite multiset of segment classes on one tower. This
module implements the derived sequence `m^(1), m^(2), ...` (final points of
`m`, of `m^-`, of `m^--`, ...) and its inverse, the partition `mu_m` of the
degrees of the derived sequence, the relation `m |- n`, the supercuspidal
expansion `m -> m_sc` and its aperiodic section `m -> m_ap`, and the
classification keys of irreducible representations labelled by
multisegments.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import itertools

import attr

from multisegment_hecke.combinatorics import partitions
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.combinatorics import supports
from multisegment_hecke.core import cuspidal_lines

# Classification data of `Z(m)`.
ClassificationKeys = collections.namedtuple(
    'ClassificationKeys',
    [
        # `m_sc`: two multisegments label the same representation iff their
        # keys agree.
        'z_key',
        # Cuspidal support, `supp(m_ap)`.
        'cusp',
        # Supercuspidal support, `supp(m_sc)`.
        'scusp',
    ])

# Cuspidal supports attached to a support by its two canonical maps.
SupportMaps = collections.namedtuple('SupportMaps', ['sc', 'ap'])


def _canonical_entries(entries):
  merged = collections.Counter()
  for delta, count in entries:
    if count < 0:
      raise ValueError('Multiplicities must be non-negative, got {} for '
                       '{}'.format(count, delta))
    merged[delta] += count
  return tuple(
      sorted(((d, c) for d, c in merged.items() if c),
             key=lambda item: item[0].sort_key))


@attr.s(frozen=True)
class Multisegment(object):
  """A finite multiset of `SegmentClass`es on one tower.

  Attributes:
    tower: The `Tower` of every segment.
    entries: Tuple of `(SegmentClass, multiplicity)` pairs sorted by level,
      decreasing length and start, with positive multiplicities.
  """
  tower = attr.ib(validator=attr.validators.instance_of(cuspidal_lines.Tower))
  entries = attr.ib(converter=_canonical_entries, default=())

  def __attrs_post_init__(self):
    for delta, _ in self.entries:
      if delta.tower != self.tower:
        raise ValueError('Segment {} lives on {}, not on {}'.format(
            delta, delta.tower, self.tower))

  @classmethod
  def from_segments(cls, tower, segment_list):
    """The multisegment summing `segment_list`, repetitions allowed."""
    return cls(tower, [(delta, 1) for delta in segment_list])

  def segments(self):
    """The segments with repetition, in canonical order."""
    return [delta for delta, count in self.entries for _ in range(count)]

  def multiplicity(self, delta):
    return dict(self.entries).get(delta, 0)

  @property
  def is_zero(self):
    return not self.entries

  @property
  def degree(self):
    return sum(count * delta.degree for delta, count in self.entries)

  @property
  def length(self):
    """Total number of points `n(m)`."""
    return sum(count * delta.length for delta, count in self.entries)

  @property
  def is_supercuspidal(self):
    return all(delta.level == -1 for delta, _ in self.entries)

  @property
  def sort_key(self):
    return tuple((delta.sort_key, count) for delta, count in self.entries)

  def support(self):
    total = supports.Support(self.tower)
    for delta, count in self.entries:
      total += segments.support(delta).scale(count)
    return total

  def __add__(self, other):
    if self.tower != other.tower:
      raise ValueError('Multisegments live on different towers: {} and '
                       '{}'.format(self.tower, other.tower))
    return Multisegment(self.tower, self.entries + other.entries)

  def scale(self, factor):
    return Multisegment(self.tower,
                        [(d, c * factor) for d, c in self.entries])

  def __str__(self):
    if not self.entries:
      return '0'
    return ' + '.join(
        str(delta) if count == 1 else '{}*{}'.format(count, delta)
        for delta, count in self.entries)


def minus(m):
  """`m^-`: every segment right-truncated, length-1 segments dropped."""
  truncated = []
  for delta, count in m.entries:
    shorter = segments.right_trunc(delta)
    if shorter is not None:
      truncated.append((shorter, count))
  return Multisegment(m.tower, truncated)


def endpoints(m):
  """`m^(1)`: the final points of the segments of `m`, with multiplicity."""
  return supports.Support.from_counts(
      m.tower, [((delta.level, delta.last), count)
                for delta, count in m.entries])


def derived_sequence(m):
  """The derived sequence `(m^(1), m^(2), ...)` with `m^(i+1) = (m^-)^(i)`.

  #### Examples

  ```python
  tower = Tower.create(INFINITY, 0)
  m = Multisegment.from_segments(tower, [SegmentClass(tower, -1, 0, 3),
                                         SegmentClass(tower, -1, 1, 1)])
  [str(s) for s in derived_sequence(m)]
  # ['1@sc + 2@sc', '1@sc', '0@sc']
  ```

  Args:
    m: A `Multisegment`.

  Returns:
    A list of `Support`s whose length is the largest segment length of `m`.
  """
  sequence = []
  while not m.is_zero:
    sequence.append(endpoints(m))
    m = minus(m)
  return sequence


def reconstruct(sequence, tower):
  """The multisegment with derived sequence `sequence`.

  With `N_i(y)` the multiplicity of the point `y` in `sequence[i - 1]`, the
  number of segments of length `L` starting at `y` is
  `N_L(y) - N_{L+1}(y - 1)`.

  Args:
    sequence: List of `Support`s on `tower`.
    tower: The `Tower`.

  Returns:
    The unique `Multisegment` `m` with `derived_sequence(m) == sequence`.

  Raises:
    ValueError: if `sequence` is not the derived sequence of a multisegment.
  """
  sequence = list(sequence)
  for item in sequence:
    if item.tower != tower:
      raise ValueError('Support {} does not live on {}'.format(item, tower))
  counts = [item.counts() for item in sequence] + [collections.Counter()]
  entries = []
  for index in range(len(sequence)):
    length = index + 1
    current, longer = counts[index], counts[index + 1]
    starts = set(current)
    for level, cls in longer:
      starts.add((level, supports.canonical_class(tower, level, cls + 1)))
    for level, cls in sorted(starts):
      previous = (level, supports.canonical_class(tower, level, cls - 1))
      count = current[(level, cls)] - longer[previous]
      if count < 0:
        raise ValueError('Not a derived sequence: negative count for length '
                         '{} at {}@{}'.format(length, cls,
                                              supports.level_text(level)))
      if count:
        entries.append((segments.SegmentClass(tower, level, cls, length),
                        count))
  result = Multisegment(tower, entries)
  if derived_sequence(result) != sequence:
    raise ValueError('Not a derived sequence: {}'.format(
        [str(item) for item in sequence]))
  return result


def mu_partition(m):
  """`mu_m`: the partition of the degrees of the derived sequence of `m`.

  Args:
    m: A nonzero `Multisegment`.

  Returns:
    A `Partition` of `deg(m)`.

  Raises:
    ValueError: if `m` is zero.
  """
  if m.is_zero:
    raise ValueError('mu is defined for nonzero multisegments')
  return partitions.Partition(item.degree for item in derived_sequence(m))


def mu_bar(m):
  """The increasing family `(deg m^(t) <= ... <= deg m^(1))`."""
  return tuple(reversed(mu_partition(m).parts))


def segment_degrees(m):
  """The partition of the degrees of the segments of `m`."""
  return partitions.Partition(delta.degree for delta in m.segments())


def conjugate_mu_weighted(m):
  """The conjugate of `mu_m` in closed form.

  It is the partition of the segment lengths, each repeated as many times as
  the degree of the points of its line. With points of degree 1 this is
  `segment_degrees(m)`.
  """
  parts = []
  for delta in m.segments():
    parts.extend([delta.length] * delta.line.degree)
  return partitions.Partition(parts)


def descendants(m):
  """All `n` with `m |- n`, in canonical order.

  `m |- n` when `n` is obtained by replacing some segments `[a, b]` of `m` by
  `[a, b - 1]` (dropping them when they have length 1).
  """
  choices = []
  for delta, count in m.entries:
    shorter = segments.right_trunc(delta)
    options = []
    for truncated in range(count + 1):
      kept = [(delta, count - truncated)]
      if shorter is not None:
        kept.append((shorter, truncated))
      options.append(kept)
    choices.append(options)
  found = set()
  for combination in itertools.product(*choices):
    found.add(
        Multisegment(m.tower, [pair for option in combination
                               for pair in option]))
  return sorted(found, key=lambda n: n.sort_key)


def vdash(m, n):
  """Whether `m |- n`."""
  if m.tower != n.tower:
    return False
  return n in set(descendants(m))


def delta(m, n):
  """`delta(m, n) = deg(m) - deg(n)` for `m |- n`.

  Raises:
    ValueError: if `m |- n` fails.
  """
  if not vdash(m, n):
    raise ValueError('{} does not derive {}'.format(m, n))
  return m.degree - n.degree


def padding_witness(m, other):
  """Length-1 multisegments `n`, `n'` with `m + n = other + n'`.

  Such a pair exists whenever `m^- = other^-`.

  Returns:
    A tuple `(n, n_prime)` of sums of length-1 segments.

  Raises:
    ValueError: if `m^-` and `other^-` differ.
  """
  if minus(m) != minus(other):
    raise ValueError('{} and {} have different truncations'.format(m, other))

  def points(x):
    return Multisegment(x.tower, [(d, c) for d, c in x.entries
                                  if d.length == 1])

  return points(other), points(m)


def sc_expand(delta):
  """`delta_sc` as a multisegment; see `segments.sc_shifts`."""
  return Multisegment.from_segments(delta.tower, segments.sc_shifts(delta))


def sc(m):
  """`m_sc`: the additive extension of `sc_expand` to multisegments."""
  total = Multisegment(m.tower)
  for delta, count in m.entries:
    total += sc_expand(delta).scale(count)
  return total


def _digits(value, base):
  digits = []
  while value:
    value, digit = divmod(value, base)
    digits.append(digit)
  return digits


def ap(m):
  """`m_ap`: the unique aperiodic multisegment whose expansion is `m`.

  The segments of each length `L` are treated separately. When the
  supercuspidal line has order 1, with `v` segments of length `L`, the
  remainder `v mod l` stays supercuspidal and the base-`l` digits of
  `(v - v mod l) / l` are the multiplicities of the length `L` segment at
  the levels `0, 1, ...`. When the order `o0` is at least 2, with
  `v_a` segments of length `L` starting at `a`, `c = min_a v_a` periods are
  removed; their base-`l` digits give the level multiplicities and the
  `v_a - c` stay supercuspidal.

  #### Examples

  ```python
  tower = Tower.create(1, 2)
  point = SegmentClass(tower, -1, 0, 1)
  str(ap(Multisegment(tower, [(point, 3)])))  # '[0,0]@sc + [0,0]@c0'
  ```

  Args:
    m: A supercuspidal `Multisegment`.

  Returns:
    An aperiodic `Multisegment` `a` with `sc(a) == m`. In characteristic 0,
    `m` itself.

  Raises:
    ValueError: if `m` is not supercuspidal.
  """
  if not m.is_supercuspidal:
    raise ValueError('ap expects a supercuspidal multisegment, got {}'.format(
        m))
  tower = m.tower
  if tower.characteristic == 0:
    return m
  ell = tower.characteristic
  order = tower.base.order
  by_length = collections.defaultdict(collections.Counter)
  for delta, count in m.entries:
    by_length[delta.length][delta.start] += count
  entries = []
  for length, starts in sorted(by_length.items()):
    if order == 1:
      total = starts[0]
      kept = {0: total % ell}
      periods_count = (total - total % ell) // ell
    else:
      periods_count = min(starts[a] for a in range(order))
      kept = {a: starts[a] - periods_count for a in range(order)}
    for start, count in kept.items():
      entries.append((segments.SegmentClass(tower, -1, start, length), count))
    for level, digit in enumerate(_digits(periods_count, ell)):
      entries.append((segments.SegmentClass(tower, level, 0, length), digit))
  return Multisegment(tower, entries)


def _as_points(t):
  return Multisegment(t.tower, [
      (segments.SegmentClass(t.tower, level, cls, 1), count)
      for (level, cls), count in t.entries
  ])


def support_maps(t):
  """`t_sc` and `t_ap` for a cuspidal support `t`.

  Points are embedded as length-1 segments: `t_sc = supp(sc(t))` and
  `t_ap = supp(ap(sc(t)))`. On supercuspidal `t` the latter is
  `supp(ap(t))`.

  Returns:
    A `SupportMaps` namedtuple.
  """
  expanded = sc(_as_points(t))
  return SupportMaps(sc=expanded.support(), ap=ap(expanded).support())


def sc_preimage_supports(s):
  """Every cuspidal support `t` with `t_sc = s`, in canonical order.

  Args:
    s: A supercuspidal `Support`.

  Returns:
    A list of `Support`s.

  Raises:
    ValueError: if `s` is not supercuspidal.
  """
  if not s.is_supercuspidal:
    raise ValueError('Expected a supercuspidal support, got {}'.format(s))
  tower = s.tower
  if tower.characteristic == 0:
    return [s]
  level_images = []
  level = 0
  while tower.shift_count(level) <= s.size:
    image = support_maps(supports.Support.from_points(tower,
                                                      [(level, 0)])).sc
    level_images.append((level, image))
    level += 1

  found = []

  def search(index, remaining, chosen):
    if index == len(level_images):
      found.append(remaining + supports.Support.from_counts(tower, chosen))
      return
    level, image = level_images[index]
    count = 0
    while True:
      with_level = chosen + ([((level, 0), count)] if count else [])
      search(index + 1, remaining, with_level)
      if not remaining.contains(image):
        break
      remaining = remaining - image
      count += 1

  search(0, s, [])
  return sorted(found, key=lambda t: t.entries)


def _points_aperiodic(t):
  for level in t.levels():
    line = t.tower.level_line(level)
    if line.e == cuspidal_lines.INFINITY:
      continue
    counts = t.restrict(level).counts()
    if line.order == 1:
      if counts[(level, 0)] >= line.e:
        return False
    elif all(counts[(level, a)] for a in range(line.order)):
      return False
  return True


def unlinked_decomposition(t):
  """Pairwise unlinked segments of length `< e` with total support `t`.

  The longest segment contained in `t` is taken first (smallest start on
  ties) and the rest of the support is decomposed recursively.

  Args:
    t: An aperiodic cuspidal `Support`: no line of finite order `o >= 2`
      carries every class and no line of order 1 carries a point `e` times or
      more.

  Returns:
    A `Multisegment`.

  Raises:
    ValueError: if `t` is not aperiodic.
  """
  if not _points_aperiodic(t):
    raise ValueError('{} is not an aperiodic support'.format(t))
  tower = t.tower
  chosen = []
  remaining = t
  while not remaining.is_zero:
    best = None
    for (level, cls), _ in remaining.entries:
      length = 1
      while length < remaining.size and remaining.contains(
          segments.support(
              segments.SegmentClass(tower, level, cls, length + 1))):
        length += 1
      if best is None or length > best.length:
        best = segments.SegmentClass(tower, level, cls, length)
    chosen.append(best)
    remaining = remaining - segments.support(best)
  return Multisegment.from_segments(tower, chosen)


def classification_keys(m):
  """Keys `(m_sc, supp(m_ap), supp(m_sc))` classifying `Z(m)`."""
  expanded = sc(m)
  return ClassificationKeys(
      z_key=expanded, cusp=ap(expanded).support(), scusp=expanded.support())


def classify_equal(m, other):
  """Whether `m` and `other` label isomorphic representations."""
  return m.tower == other.tower and sc(m) == sc(other)


def dual(m):
  """The contragredient multisegment, segment by segment."""
  return Multisegment(m.tower.contragredient(),
                      [(segments.dual(d), c) for d, c in m.entries])
