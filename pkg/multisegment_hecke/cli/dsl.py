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
"""Text forms of towers, segments, multisegments, supports and characters.

Grammar, with whitespace allowed between tokens:

  tower        := ['tower'] ['('] key '=' value (',' key '=' value)* [')']
                  key in {o0, l, deg, dual}; o0 may be 'inf'
  multisegment := '0' | term ('+' term)*
  term         := [INT '*'] '[' INT ',' INT ']' '@' level
  support      := '0' | point ('+' point)*
  point        := [INT '*'] INT '@' level
  level        := 'sc' | 'c' INT
  characters   := character (';' character)*
  character    := ('z' | 'l') '(' INT ',' INT ')' ['*' INT]

The printed forms of `Multisegment`, `Support` and `Tower` parse back to the
same values.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import re

from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.combinatorics import supports
from multisegment_hecke.core import cuspidal_lines

_INT_RE = re.compile(r'-?\d+')
_KEY_RE = re.compile(r'[a-z][a-z0-9]*')

# A character of `hecke induce`: `kind` is 'z' or 'l', `scale` twists the
# `X_j`.
CharacterSpec = collections.namedtuple('CharacterSpec',
                                       ['kind', 'a', 'b', 'scale'])


class ParseError(ValueError):
  """Syntax error in a text form.

  Attributes:
    text: The text being parsed.
    position: Zero-based index of the offending character.
  """

  def __init__(self, message, text=None, position=0):
    if text is not None:
      message = '{} at position {} of {!r}'.format(message, position, text)
    super(ParseError, self).__init__(message)
    self.text = text
    self.position = position


class _Scanner(object):
  """Tokens of a text form, with the current position."""

  def __init__(self, text):
    self.text = text
    self.position = 0

  def _skip(self):
    while (self.position < len(self.text) and
           self.text[self.position].isspace()):
      self.position += 1

  def at_end(self):
    self._skip()
    return self.position == len(self.text)

  def peek(self):
    self._skip()
    return self.text[self.position:self.position + 1]

  def fail(self, message):
    raise ParseError(message, self.text, self.position)

  def accept(self, token):
    self._skip()
    if self.text.startswith(token, self.position):
      self.position += len(token)
      return True
    return False

  def expect(self, token):
    if not self.accept(token):
      self.fail('Expected {!r}'.format(token))

  def integer(self):
    self._skip()
    match = _INT_RE.match(self.text, self.position)
    if not match:
      self.fail('Expected an integer')
    self.position = match.end()
    return int(match.group())

  def key(self):
    self._skip()
    match = _KEY_RE.match(self.text, self.position)
    if not match:
      self.fail('Expected a key')
    self.position = match.end()
    return match.group()

  def finish(self):
    if not self.at_end():
      self.fail('Unexpected trailing text')


def _level(scanner):
  if scanner.accept('sc'):
    return -1
  scanner.expect('c')
  position = scanner.position
  level = scanner.integer()
  if level < 0:
    raise ParseError('Cuspidal levels are non-negative', scanner.text,
                     position)
  return level


def _is_zero(text):
  return text.strip() == '0'


def parse_tower(text):
  """Parses `tower(o0=3, l=2)` or `o0=3,l=2`, with optional `deg`, `dual`.

  #### Examples

  ```python
  str(parse_tower('o0=1,l=2'))  # 'tower(o0=1, l=2)'
  parse_tower('tower(o0=inf, l=0)').characteristic  # 0
  ```

  Raises:
    ParseError: on a syntax error, an unknown or repeated key, or a missing
      `o0` or `l`.
    ValueError: if the values do not describe a tower.
  """
  scanner = _Scanner(text)
  scanner.accept('tower')
  opened = scanner.accept('(')
  values = {}
  while True:
    position = scanner.position
    key = scanner.key()
    if key not in ('o0', 'l', 'deg', 'dual') or key in values:
      raise ParseError('Unknown or repeated key {!r}'.format(key), text,
                       position)
    scanner.expect('=')
    if key == 'o0' and scanner.accept('inf'):
      values[key] = cuspidal_lines.INFINITY
    else:
      values[key] = scanner.integer()
    if not scanner.accept(','):
      break
  if opened:
    scanner.expect(')')
  scanner.finish()
  for key in ('o0', 'l'):
    if key not in values:
      raise ParseError('Missing key {!r}'.format(key), text, len(text))
  return cuspidal_lines.Tower.create(values['o0'], values['l'],
                                     values.get('deg', 1),
                                     bool(values.get('dual', 0)))


def _segment(scanner, tower):
  scanner.expect('[')
  a = scanner.integer()
  scanner.expect(',')
  b = scanner.integer()
  scanner.expect(']')
  scanner.expect('@')
  level = _level(scanner)
  return segments.SegmentClass.from_bounds(tower, a, b, level)


def parse_segment(text, tower):
  """Parses a single segment `[a,b]@level` on `tower`.

  Raises:
    ParseError: on a syntax error.
    ValueError: if `a > b` or the level does not exist on `tower`.
  """
  scanner = _Scanner(text)
  delta = _segment(scanner, tower)
  scanner.finish()
  return delta


def parse_multisegment(text, tower):
  """Parses a multisegment on `tower`.

  #### Examples

  ```python
  tower = parse_tower('o0=1,l=2')
  str(parse_multisegment('[1,1]@c0 + 2*[0,0]@sc', tower))
  # '2*[0,0]@sc + [0,0]@c0'
  ```

  Args:
    text: The text form, see the module docstring.
    tower: The `Tower` of the segments.

  Returns:
    A `Multisegment`.

  Raises:
    ParseError: on a syntax error.
    ValueError: if some `a > b` or a level does not exist on `tower`.
  """
  if _is_zero(text):
    return multisegments.Multisegment(tower)
  scanner = _Scanner(text)
  entries = []
  while True:
    count = 1
    if scanner.peek() != '[':
      count = scanner.integer()
      scanner.expect('*')
    entries.append((_segment(scanner, tower), count))
    if not scanner.accept('+'):
      break
  scanner.finish()
  return multisegments.Multisegment(tower, entries)


def parse_support(text, tower):
  """Parses a cuspidal support on `tower`, such as `5*0@sc + 1@c0`.

  Raises:
    ParseError: on a syntax error.
    ValueError: if a level does not exist on `tower`.
  """
  if _is_zero(text):
    return supports.Support(tower)
  scanner = _Scanner(text)
  counts = collections.Counter()
  while True:
    value = scanner.integer()
    count = 1
    if scanner.accept('*'):
      count, value = value, scanner.integer()
    scanner.expect('@')
    level = _level(scanner)
    counts[(level, supports.canonical_class(tower, level, value))] += count
    if not scanner.accept('+'):
      break
  scanner.finish()
  return supports.Support.from_counts(tower, counts)


def parse_characters(text):
  """Parses `z(0,1); l(3,3)*2` into a list of `CharacterSpec`s.

  Raises:
    ParseError: on a syntax error.
  """
  scanner = _Scanner(text)
  found = []
  while True:
    position = scanner.position
    if scanner.accept('z'):
      kind = 'z'
    elif scanner.accept('l'):
      kind = 'l'
    else:
      raise ParseError("Expected 'z' or 'l'", text, position)
    scanner.expect('(')
    a = scanner.integer()
    scanner.expect(',')
    b = scanner.integer()
    scanner.expect(')')
    scale = scanner.integer() if scanner.accept('*') else 1
    found.append(CharacterSpec(kind, a, b, scale))
    if not scanner.accept(';'):
      break
  scanner.finish()
  return found


def parse_composition(text):
  """Parses `2,1,1` into the tuple `(2, 1, 1)` of positive parts."""
  scanner = _Scanner(text)
  parts = []
  while True:
    position = scanner.position
    part = scanner.integer()
    if part < 1:
      raise ParseError('Composition parts must be positive', text, position)
    parts.append(part)
    if not scanner.accept(','):
      break
  scanner.finish()
  return tuple(parts)


def format_multisegment(m):
  return str(m)


def format_support(s):
  return str(s)


def format_tower(tower):
  return str(tower)
