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
"""Linkage of two segments against irreducibility of an induced module.

A segment `[a, b]` on the line of `xi` gives the character `Z(a, b)` of
`H_(b-a+1)`. For two segments the module induced from `Z(delta)` and
`Z(other)` is irreducible exactly when the segments are not linked.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging

from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines
from multisegment_hecke.hecke import meataxe
from multisegment_hecke.hecke import modules
from multisegment_hecke.hecke import prime_field

# Outcome of `linkage_bridge`.
BridgeResult = collections.namedtuple(
    'BridgeResult',
    [
        # Whether the two segments are linked.
        'linked',
        # Whether the induced module of their `Z` characters is irreducible.
        'induced_irreducible',
    ])


def xi_tower(xi, p):
  """The tower whose supercuspidal line has the order of `xi` in `F_p`."""
  return cuspidal_lines.Tower(prime_field.xi_line(xi, p))


def segment_character(delta, xi, p):
  """The character `Z(a, b)` of the segment `delta = [a, b]`."""
  return modules.char_z(delta.start, delta.end, xi, p)


def induced_module(delta, other, xi, p):
  """The module induced from `Z(delta)` and `Z(other)`."""
  return modules.induce((delta.length, other.length), [
      segment_character(delta, xi, p),
      segment_character(other, xi, p)
  ])


def linkage_bridge(delta, other, xi, p, seed=0, params=None):
  """Decides linkage combinatorially and irreducibility on the Hecke side.

  #### Examples

  ```python
  tower = xi_tower(2, 7)
  linkage_bridge(segments.SegmentClass(tower, -1, 0, 1),
                 segments.SegmentClass(tower, -1, 1, 1), 2, 7)
  # BridgeResult(linked=True, induced_irreducible=False)
  ```

  Args:
    delta: A `SegmentClass` on the supercuspidal line of `xi_tower(xi, p)`.
    other: A `SegmentClass` on the same line.
    xi: The parameter, a nonzero residue modulo `p`.
    p: A prime.
    seed: Seed of `meataxe.is_irreducible`.
      Default value: 0.
    params: Optional `meataxe.MeatAxeParams`.
      Default value: None.

  Returns:
    A `BridgeResult`. The two booleans are opposite; a warning is logged
    otherwise.

  Raises:
    ValueError: if a segment is not on the supercuspidal line of
      `xi_tower(xi, p)`.
  """
  tower = xi_tower(xi, p)
  for segment in (delta, other):
    if segment.tower != tower or segment.level != -1:
      raise ValueError('{} is not a segment of the line of xi={} in F_{}, '
                       '{}'.format(segment, xi, p, tower))
  linked = segments.linked(delta, other)
  irreducible = meataxe.is_irreducible(
      induced_module(delta, other, xi, p), seed=seed, params=params)
  if linked == irreducible:
    logging.warning(
        'Segments %s and %s: linked=%s but induced_irreducible=%s '
        '(xi=%d, p=%d)', delta, other, linked, irreducible, xi, p)
  return BridgeResult(linked=linked, induced_irreducible=irreducible)
