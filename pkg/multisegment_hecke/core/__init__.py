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
"""Arithmetic parameters of cuspidal lines and supercuspidal towers."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.core.cuspidal_lines import as_characteristic
from multisegment_hecke.core.cuspidal_lines import Characteristic
from multisegment_hecke.core.cuspidal_lines import cuspidal_lengths
from multisegment_hecke.core.cuspidal_lines import CuspidalLine
from multisegment_hecke.core.cuspidal_lines import effective_e
from multisegment_hecke.core.cuspidal_lines import INFINITY
from multisegment_hecke.core.cuspidal_lines import is_prime
from multisegment_hecke.core.cuspidal_lines import Tower
from multisegment_hecke.core.invariants import CuspidalInvariants
from multisegment_hecke.core.invariants import st_invariants

__all__ = [
    'as_characteristic',
    'Characteristic',
    'cuspidal_lengths',
    'CuspidalInvariants',
    'CuspidalLine',
    'effective_e',
    'INFINITY',
    'is_prime',
    'st_invariants',
    'Tower',
]
