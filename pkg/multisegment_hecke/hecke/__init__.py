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
"""The affine Hecke algebra of type A and its modules over prime fields."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.hecke import algebra
from multisegment_hecke.hecke import bridge
from multisegment_hecke.hecke import meataxe
from multisegment_hecke.hecke import modules
from multisegment_hecke.hecke import permutations
from multisegment_hecke.hecke import prime_field
from multisegment_hecke.hecke import relations
from multisegment_hecke.hecke.algebra import hecke_algebra
from multisegment_hecke.hecke.algebra import HeckeAlgebra
from multisegment_hecke.hecke.algebra import HeckeElement
from multisegment_hecke.hecke.bridge import BridgeResult
from multisegment_hecke.hecke.bridge import linkage_bridge
from multisegment_hecke.hecke.meataxe import burnside_dimension
from multisegment_hecke.hecke.meataxe import is_irreducible
from multisegment_hecke.hecke.meataxe import MeatAxeParams
from multisegment_hecke.hecke.modules import are_isomorphic
from multisegment_hecke.hecke.modules import central_character
from multisegment_hecke.hecke.modules import char_l
from multisegment_hecke.hecke.modules import char_z
from multisegment_hecke.hecke.modules import Character
from multisegment_hecke.hecke.modules import HeckeModule
from multisegment_hecke.hecke.modules import hom_space
from multisegment_hecke.hecke.modules import induce
from multisegment_hecke.hecke.modules import one_dim_sub_quot
from multisegment_hecke.hecke.modules import standard_module
from multisegment_hecke.hecke.modules import z_equals_l_criterion
from multisegment_hecke.hecke.relations import check_relations
from multisegment_hecke.hecke.relations import RelationReport

__all__ = [
    'algebra',
    'are_isomorphic',
    'BridgeResult',
    'bridge',
    'burnside_dimension',
    'central_character',
    'char_l',
    'char_z',
    'Character',
    'check_relations',
    'hecke_algebra',
    'HeckeAlgebra',
    'HeckeElement',
    'HeckeModule',
    'hom_space',
    'induce',
    'is_irreducible',
    'linkage_bridge',
    'meataxe',
    'MeatAxeParams',
    'modules',
    'one_dim_sub_quot',
    'permutations',
    'prime_field',
    'RelationReport',
    'relations',
    'standard_module',
    'z_equals_l_criterion',
]
