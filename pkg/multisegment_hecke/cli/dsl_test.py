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
"""Tests for cli.dsl."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.cli import dsl
from multisegment_hecke.combinatorics import enumeration
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines

Tower = cuspidal_lines.Tower
INFINITY = cuspidal_lines.INFINITY


class TowerTest(parameterized.TestCase):

  @parameterized.parameters(
      ('o0=1,l=2', 1, 2),
      ('tower(o0=3, l=2)', 3, 2),
      (' tower ( o0 = inf , l = 0 ) ', INFINITY, 0),
  )
  def test_parse(self, text, o0, l):
    self.assertEqual(dsl.parse_tower(text), Tower.create(o0, l))

  def test_round_trip(self):
    for tower in (Tower.create(1, 2), Tower.create(4, 3, degree=2),
                  Tower.create(INFINITY, 0), Tower.create(3, 2, dual=True)):
      self.assertEqual(dsl.parse_tower(dsl.format_tower(tower)), tower)

  def test_syntax_errors(self):
    for text in ('o0=1', 'x=1,l=2', 'o0=1,o0=2,l=2', 'tower(o0=1,l=2',
                 'o0=1;l=2', ''):
      with self.assertRaises(dsl.ParseError):
        dsl.parse_tower(text)

  def test_domain_errors(self):
    for text in ('o0=1,l=4', 'o0=inf,l=2', 'o0=3,l=0'):
      with self.assertRaises(ValueError) as context:
        dsl.parse_tower(text)
      self.assertNotIsInstance(context.exception, dsl.ParseError)


class MultisegmentTest(parameterized.TestCase):

  def test_ledger(self):
    tower = Tower.create(1, 2)
    m = dsl.parse_multisegment('2*[0,0]@sc + [1,1]@c0', tower)
    self.assertEqual(m.multiplicity(segments.SegmentClass(tower, -1, 0, 1)),
                     2)
    self.assertEqual(m.multiplicity(segments.SegmentClass(tower, 0, 0, 1)), 1)
    self.assertLen(m.entries, 2)

  def test_reduced_start(self):
    tower = Tower.create(3, 2)
    (delta,) = dsl.parse_multisegment('[2,5]@sc', tower).segments()
    self.assertEqual(delta.start, 2)
    self.assertEqual(delta.length, 4)

  def test_negative_bounds(self):
    tower = Tower.create(INFINITY, 0)
    delta = dsl.parse_segment('[-2,1]@sc', tower)
    self.assertEqual((delta.start, delta.length), (-2, 4))

  def test_canonical_order(self):
    tower = Tower.create(1, 2)
    m = dsl.parse_multisegment('[1,1]@c0 + 2*[0,0]@sc', tower)
    self.assertEqual(dsl.format_multisegment(m), '2*[0,0]@sc + [0,0]@c0')

  def test_zero(self):
    tower = Tower.create(1, 2)
    m = dsl.parse_multisegment(' 0 ', tower)
    self.assertTrue(m.is_zero)
    self.assertEqual(dsl.format_multisegment(m), '0')

  def test_reversed_bounds(self):
    with self.assertRaises(ValueError) as context:
      dsl.parse_multisegment('[3,1]@sc', Tower.create(3, 2))
    self.assertNotIsInstance(context.exception, dsl.ParseError)

  def test_level_on_characteristic_zero(self):
    with self.assertRaises(ValueError) as context:
      dsl.parse_multisegment('[0,0]@c0', Tower.create(INFINITY, 0))
    self.assertNotIsInstance(context.exception, dsl.ParseError)

  @parameterized.parameters(
      ('[0,0]@sx', 6),
      ('[0,0', 4),
      ('2*[0,0]@sc +', 12),
      ('[0,0]@sc [1,1]@sc', 9),
      ('2[0,0]@sc', 1),
      ('[0,0]@c-1', 7),
  )
  def test_error_position(self, text, position):
    with self.assertRaises(dsl.ParseError) as context:
      dsl.parse_multisegment(text, Tower.create(INFINITY, 0))
    self.assertEqual(context.exception.position, position)
    self.assertEqual(context.exception.text, text)

  @parameterized.parameters((1, 2), (2, 3), (3, 2))
  def test_round_trip(self, o0, l):
    tower = Tower.create(o0, l)
    for degree in range(1, 5):
      for m in enumeration.enumerate_by_degree(tower, degree):
        text = dsl.format_multisegment(m)
        self.assertEqual(dsl.parse_multisegment(text, tower), m)
        self.assertEqual(
            dsl.format_multisegment(dsl.parse_multisegment(text, tower)),
            text)


class SupportTest(parameterized.TestCase):

  def test_parse(self):
    tower = Tower.create(1, 2)
    s = dsl.parse_support('5*0@sc + 1@c0', tower)
    self.assertEqual(s.count(-1, 0), 5)
    self.assertEqual(s.count(0, 0), 1)
    self.assertEqual(dsl.format_support(s), '5*0@sc + 0@c0')

  def test_merges_classes(self):
    tower = Tower.create(3, 2)
    s = dsl.parse_support('0@sc + 3@sc + 2*1@sc', tower)
    self.assertEqual(dsl.format_support(s), '2*0@sc + 2*1@sc')

  def test_round_trip(self):
    tower = Tower.create(INFINITY, 0)
    for text in ('0', '0@sc', '2*-1@sc + 0@sc + 3*4@sc'):
      s = dsl.parse_support(text, tower)
      self.assertEqual(dsl.parse_support(dsl.format_support(s), tower), s)

  def test_errors(self):
    tower = Tower.create(1, 2)
    with self.assertRaises(dsl.ParseError):
      dsl.parse_support('0@', tower)
    with self.assertRaises(dsl.ParseError):
      dsl.parse_support('[0,0]@sc', tower)


class CharactersTest(parameterized.TestCase):

  def test_parse(self):
    self.assertEqual(
        dsl.parse_characters('z(0,1); l(3,3)*2'),
        [dsl.CharacterSpec('z', 0, 1, 1), dsl.CharacterSpec('l', 3, 3, 2)])

  def test_errors(self):
    with self.assertRaises(dsl.ParseError) as context:
      dsl.parse_characters('q(0,1)')
    self.assertEqual(context.exception.position, 0)
    with self.assertRaises(dsl.ParseError):
      dsl.parse_characters('z(0,1) z(1,1)')

  def test_composition(self):
    self.assertEqual(dsl.parse_composition('2, 1,1'), (2, 1, 1))
    with self.assertRaises(dsl.ParseError) as context:
      dsl.parse_composition('2,0')
    self.assertEqual(context.exception.position, 2)


if __name__ == '__main__':
  absltest.main()
