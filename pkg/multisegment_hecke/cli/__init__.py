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
"""Text forms and the command line front end."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.cli import dsl
from multisegment_hecke.cli import main
from multisegment_hecke.cli.dsl import ParseError
from multisegment_hecke.cli.dsl import parse_multisegment
from multisegment_hecke.cli.dsl import parse_segment
from multisegment_hecke.cli.dsl import parse_support
from multisegment_hecke.cli.dsl import parse_tower
from multisegment_hecke.cli.main import run

__all__ = [
    'dsl',
    'main',
    'ParseError',
    'parse_multisegment',
    'parse_segment',
    'parse_support',
    'parse_tower',
    'run',
]
