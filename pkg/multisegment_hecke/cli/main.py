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
"""Command line front end.

Every subcommand prints one JSON document, with sorted keys, to standard
output; `--table` prints `key: value` lines instead. `sc`, `ap` and `mu` print
the classification record of their multisegment, with keys `tower`, `input`,
`sc`, `ap`, `mu`, `cusp` and `scusp`. The exit code is 0 on success, 1 on a
syntax or usage error, 2 on any other invalid input and 3 when a computation
gives up, as the irreducibility test does after too many inconclusive trials.

  multisegment_hecke ap --tower 'o0=1,l=2' --m '2*[0,0]@sc'
  multisegment_hecke count --tower 'o0=1,l=2' --support '5*0@sc' --ap
  multisegment_hecke hecke bridge --seg1 '[0,0]@sc' --seg2 '[1,1]@sc' \
      --p 7 --xi 2
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import sys

from absl import app
from absl import logging
from absl.flags import argparse_flags

from multisegment_hecke.cli import dsl
from multisegment_hecke.combinatorics import enumeration
from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import partitions
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines
from multisegment_hecke.finite_gl import james_labels
from multisegment_hecke.hecke import bridge
from multisegment_hecke.hecke import meataxe
from multisegment_hecke.hecke import modules
from multisegment_hecke.hecke import prime_field
from multisegment_hecke.hecke import relations


class _Parser(argparse_flags.ArgumentParser):
  """Reports usage errors as `dsl.ParseError` instead of exiting."""

  def error(self, message):
    raise dsl.ParseError('{}: {}'.format(self.prog, message))


def _order(text):
  """`inf` or a positive integer."""
  if text == 'inf':
    return cuspidal_lines.INFINITY
  return int(text)


def _partition(text):
  try:
    return partitions.Partition.from_string(text)
  except ValueError as e:
    raise dsl.ParseError(str(e), text, 0)


def _character_json(found):
  return [{
      's': list(item.character.s),
      'x': list(item.character.x),
      'multiplicity': item.multiplicity
  } for item in found]


def _matrices_json(module):
  matrices = {}
  for i, matrix in enumerate(module.s):
    matrices['S{}'.format(i + 1)] = prime_field.to_ints(matrix).tolist()
  for j, matrix in enumerate(module.x):
    matrices['X{}'.format(j + 1)] = prime_field.to_ints(matrix).tolist()
  return matrices


def _central_character_or_none(module):
  try:
    return list(modules.central_character(module))
  except ValueError as e:
    logging.info('No central character: %s', e)
    return None


def _module_report(module, args):
  report = {
      'dimension': module.dimension,
      'irreducible': meataxe.is_irreducible(module, seed=args.seed),
      'central_character': _central_character_or_none(module),
  }
  if args.dump_matrices:
    report['matrices'] = _matrices_json(module)
  return report


def _normalize(args):
  tower = dsl.parse_tower(args.tower)
  m = dsl.parse_multisegment(args.m, tower)
  return {
      'multisegment': dsl.format_multisegment(m),
      'degree': m.degree,
      'tower': dsl.format_tower(tower),
  }


def _classification(args):
  """The classification record of `--m`, shared by `sc`, `ap` and `mu`."""
  tower = dsl.parse_tower(args.tower)
  m = dsl.parse_multisegment(args.m, tower)
  keys = multisegments.classification_keys(m)
  mu = None if m.is_zero else str(multisegments.mu_partition(m))
  return m, {
      'tower': dsl.format_tower(tower),
      'input': dsl.format_multisegment(m),
      'sc': dsl.format_multisegment(keys.z_key),
      'ap': dsl.format_multisegment(multisegments.ap(keys.z_key)),
      'mu': mu,
      'cusp': dsl.format_support(keys.cusp),
      'scusp': dsl.format_support(keys.scusp),
  }


def _sc(args):
  return _classification(args)[1]


def _ap(args):
  return _classification(args)[1]


def _mu(args):
  m, payload = _classification(args)
  # Raises on the zero multisegment, which has no `mu`.
  payload['conjugate'] = str(multisegments.mu_partition(m).conjugate())
  payload['segment_degrees'] = str(multisegments.segment_degrees(m))
  return payload


def _linked(args):
  tower = dsl.parse_tower(args.tower)
  delta = dsl.parse_segment(args.seg1, tower)
  other = dsl.parse_segment(args.seg2, tower)
  return {
      'linked': segments.linked(delta, other),
      'precedes': segments.precedes(delta, other),
      'follows': segments.precedes(other, delta),
  }


def _classify_equal(args):
  tower = dsl.parse_tower(args.tower)
  m = dsl.parse_multisegment(args.m1, tower)
  other = dsl.parse_multisegment(args.m2, tower)
  return {
      'equal': multisegments.classify_equal(m, other),
      'z_key_1': dsl.format_multisegment(multisegments.sc(m)),
      'z_key_2': dsl.format_multisegment(multisegments.sc(other)),
  }


def _found(args):
  tower = dsl.parse_tower(args.tower)
  s = dsl.parse_support(args.support, tower)
  if args.ap:
    return enumeration.enumerate_mult_ap(s)
  return enumeration.enumerate_mult(s)


def _enum(args):
  found = _found(args)
  return {
      'count': len(found),
      'multisegments': [dsl.format_multisegment(m) for m in found],
  }


def _count(args):
  return {'count': len(_found(args))}


def _regular_partitions(args):
  result = partitions.enumerate_e_regular(args.n, args.e)
  return {
      'count': result.count,
      'generating_function':
          partitions.count_e_regular_by_generating_function(args.n, args.e),
      'partitions': [str(mu) for mu in result.partitions],
  }


def _check_relations(args):
  report = relations.check_relations(
      args.n, args.xi, args.p, trials=args.trials, seed=args.seed)
  return {
      'passed': report.passed,
      'checked': report.checked,
      'failures': list(report.failures),
  }


def _standard_module(args):
  module = modules.standard_module(args.a, args.b, args.xi, args.p)
  report = _module_report(module, args)
  found = modules.one_dim_sub_quot(module)
  report['submodules'] = _character_json(found.submodules)
  report['quotients'] = _character_json(found.quotients)
  return report


def _induce(args):
  specs = dsl.parse_characters(args.chars)
  factors = []
  for spec in specs:
    build = modules.char_z if spec.kind == 'z' else modules.char_l
    factors.append(build(spec.a, spec.b, args.xi, args.p, scale=spec.scale))
  if args.alpha:
    alpha = dsl.parse_composition(args.alpha)
  else:
    alpha = tuple(spec.b - spec.a + 1 for spec in specs)
  return _module_report(modules.induce(alpha, factors), args)


def _bridge(args):
  tower = bridge.xi_tower(args.xi, args.p)
  result = bridge.linkage_bridge(
      dsl.parse_segment(args.seg1, tower),
      dsl.parse_segment(args.seg2, tower),
      args.xi,
      args.p,
      seed=args.seed)
  return {
      'linked': result.linked,
      'induced_irreducible': result.induced_irreducible,
  }


def _finite_cuspidal(args):
  return james_labels.FiniteCuspidal('sigma', args.e, args.l)


def _st_cuspidal(args):
  sigma = _finite_cuspidal(args)
  return {
      'cuspidal': james_labels.st_is_cuspidal(sigma, args.n),
      'st_equals_l': james_labels.st_equals_l(sigma, args.n),
      'label': str(james_labels.l_label(sigma, args.n)),
  }


def _subquotients(args):
  accept = james_labels.subquotient_filter(_partition(args.mu))
  return {
      'admitted': [str(nu) for nu in accept.admitted()],
      'multiplicity_one': str(accept.shape),
  }


def _count_scusp(args):
  return {
      'count': james_labels.count_by_scusp(args.n),
      'shapes': [str(mu) for mu in partitions.partitions_of(args.n)],
  }


def _add_tower(parser):
  parser.add_argument('--tower', required=True,
                      help="Tower, such as 'o0=3,l=2' or 'o0=inf,l=0'.")


def _add_seed(parser):
  parser.add_argument('--seed', type=int, default=0,
                      help='Seed of the randomized irreducibility test.')


def _add_field(parser):
  parser.add_argument('--p', type=int, required=True, help='Prime field.')
  parser.add_argument('--xi', type=int, required=True,
                      help='Parameter, nonzero modulo p.')


def build_parser():
  """The argument parser of every subcommand."""
  # Abbreviations would collide with the inherited absl flags.
  parser = _Parser(description='Multisegments and affine Hecke algebras.',
                   allow_abbrev=False)
  parser.add_argument('--table', action='store_true',
                      help='Print key: value lines instead of JSON.')
  commands = parser.add_subparsers(dest='command')
  commands.required = True

  def add(container, name, handler, description):
    sub = container.add_parser(name, help=description,
                               inherited_absl_flags=None, allow_abbrev=False)
    if handler is not None:
      sub.set_defaults(handler=handler)
    return sub

  for name, handler, description in (
      ('normalize', _normalize, 'Canonical form of a multisegment.'),
      ('sc', _sc, 'Supercuspidal expansion m_sc.'),
      ('ap', _ap, 'Aperiodic multisegment of sc(m).'),
      ('mu', _mu, 'The partition mu_m.')):
    sub = add(commands, name, handler, description)
    _add_tower(sub)
    sub.add_argument('--m', required=True, help='Multisegment.')

  sub = add(commands, 'linked', _linked, 'Linkage of two segments.')
  _add_tower(sub)
  sub.add_argument('--seg1', required=True)
  sub.add_argument('--seg2', required=True)

  sub = add(commands, 'classify-equal', _classify_equal,
            'Whether two multisegments label the same representation.')
  _add_tower(sub)
  sub.add_argument('--m1', required=True)
  sub.add_argument('--m2', required=True)

  for name, handler, description in (
      ('enum', _enum, 'Multisegments with a given support.'),
      ('count', _count, 'Number of multisegments with a given support.')):
    sub = add(commands, name, handler, description)
    _add_tower(sub)
    sub.add_argument('--support', required=True, help='Cuspidal support.')
    sub.add_argument('--ap', action='store_true',
                     help='Only aperiodic multisegments.')

  sub = add(commands, 'regular-partitions', _regular_partitions,
            'e-regular partitions of n.')
  sub.add_argument('--n', type=int, required=True)
  sub.add_argument('--e', type=_order, required=True)

  hecke = add(commands, 'hecke', None, 'Affine Hecke algebra computations.')
  hecke_commands = hecke.add_subparsers(dest='hecke_command')
  hecke_commands.required = True

  sub = add(hecke_commands, 'check-relations', _check_relations,
            'Defining relations in normal form.')
  sub.add_argument('--n', type=int, required=True)
  _add_field(sub)
  sub.add_argument('--trials', type=int, default=100)
  _add_seed(sub)

  sub = add(hecke_commands, 'standard-module', _standard_module,
            'The standard module S(a, b).')
  sub.add_argument('--a', type=int, required=True)
  sub.add_argument('--b', type=int, required=True)
  _add_field(sub)
  _add_seed(sub)
  sub.add_argument('--dump-matrices', action='store_true')

  sub = add(hecke_commands, 'induce', _induce,
            'Module induced from characters.')
  sub.add_argument('--alpha', default=None,
                   help='Composition, such as 2,1; read from --chars if unset.')
  sub.add_argument('--chars', required=True,
                   help="Characters, such as 'z(0,1); l(3,3)*2'.")
  _add_field(sub)
  _add_seed(sub)
  sub.add_argument('--dump-matrices', action='store_true')

  sub = add(hecke_commands, 'bridge', _bridge,
            'Linkage against irreducibility of the induced module.')
  sub.add_argument('--seg1', required=True)
  sub.add_argument('--seg2', required=True)
  _add_field(sub)
  _add_seed(sub)

  finite = add(commands, 'finite', None, 'Finite general linear groups.')
  finite_commands = finite.add_subparsers(dest='finite_command')
  finite_commands.required = True

  sub = add(finite_commands, 'st-cuspidal', _st_cuspidal,
            'Whether st(sigma, n) is cuspidal.')
  sub.add_argument('--e', type=_order, required=True)
  sub.add_argument('--l', type=int, required=True)
  sub.add_argument('--n', type=int, required=True)

  sub = add(finite_commands, 'subquotients', _subquotients,
            'Shapes of the subquotients of z(sigma, mu).')
  sub.add_argument('--mu', required=True, help="Partition, such as '(2,1)'.")

  sub = add(finite_commands, 'count-scusp', _count_scusp,
            'Number of labels of supercuspidal support n [sigma].')
  sub.add_argument('--n', type=int, required=True)
  return parser


def _emit(payload, stream, table=False):
  if table:
    for key in sorted(payload):
      value = payload[key]
      if not isinstance(value, str):
        value = json.dumps(value, sort_keys=True)
      stream.write('{}: {}\n'.format(key, value))
  else:
    stream.write(json.dumps(payload, sort_keys=True) + '\n')


def execute(args, stream):
  """Runs the parsed command `args`, returning the exit code."""
  try:
    payload = args.handler(args)
  except dsl.ParseError as e:
    _emit({'error': str(e)}, stream)
    return 1
  except ValueError as e:
    _emit({'error': str(e)}, stream)
    return 2
  except RuntimeError as e:
    logging.error('Internal error in %s: %s', args.command, e)
    _emit({'error': 'internal error: {}'.format(e)}, stream)
    return 3
  _emit(payload, stream, args.table)
  return 0


def run(argv, stream=None):
  """Parses `argv`, without the program name, and runs the command.

  #### Examples

  ```python
  out = io.StringIO()
  run(['ap', '--tower', 'o0=1,l=2', '--m', '2*[0,0]@sc'], out)  # 0
  record = json.loads(out.getvalue())
  record['ap'], record['cusp'], record['scusp']  # '[0,0]@c0', '0@c0', '2*0@sc'
  ```

  Args:
    argv: List of strings.
    stream: Writable text stream.
      Default value: None, meaning `sys.stdout`.

  Returns:
    The exit code: 0 on success, 1 on a syntax or usage error, 2 on any
    other invalid input, 3 on an internal error.
  """
  stream = stream or sys.stdout
  try:
    args = build_parser().parse_args(argv)
  except dsl.ParseError as e:
    _emit({'error': str(e)}, stream)
    return 1
  return execute(args, stream)


def _parse_flags(argv):
  try:
    return build_parser().parse_args(argv[1:])
  except dsl.ParseError as e:
    _emit({'error': str(e)}, sys.stdout)
    sys.exit(1)


def main(args):
  return execute(args, sys.stdout)


def entry_point():
  app.run(main, flags_parser=_parse_flags)


if __name__ == '__main__':
  entry_point()
