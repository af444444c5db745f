"""Exact structure-constant toolkit for coquasi-Hopf algebras: crossed
products, cleft extensions, the Hom-space Morita context, and module
equivalences, all verified in exact cyclotomic-rational arithmetic."""

from .cyclotomic import FieldSpec, Scalar, primitive_root, scalar_arith
from .linear import (Algebra, Coalgebra, Functional, LinMap, Space,
                     apply_functional, check_algebra, check_coalgebra,
                     convolution_inverse, convolution_product, sweedler)
from .structures import (CoquasiBialgebra, CoquasiHopf, QuasiBialgebraData,
                         Twist, check_coquasi_bialgebra, check_coquasi_hopf,
                         dualize, regular_actions, solve_twist_f, to_quasi_dual,
                         twist_bialgebra)
from .comodule import (ComoduleAlgebra, RelativeHopfModule, check_comodule_algebra,
                       check_relative_hopf_module, coinvariants, galois_can,
                       relative_hom_dimension, twist_comodule_algebra)
from .crossed import (CrossedProduct, CrossedSystem, EquivalenceWitness,
                      base_field_obstruction, build_crossed_product,
                      check_crossed_system, circledast_algebra, deform_by_a,
                      equivalent_crossed_products, heisenberg_double,
                      sigma_inverse, trivial_crossed_system, twist_crossed_system)
from .cleft import (CleavingSystem, MoritaContext, adjoint_coalgebra,
                    build_morita, change_cleaving, check_adjoint_coalgebra,
                    check_cleaving, check_morita, cleft_to_crossed,
                    crossed_to_cleft, extract_cleaving_witness, morita_strictness)
from .hopf_modules import (CoquasiHopfModule, check_hopf_module, check_projection,
                           equivalence_maps, free_hopf_module, from_relative_hopf,
                           projection_pi, to_relative_hopf)
from .catalog import (H2Datum, H3Datum, builtin, check_h2_datum, check_h3_datum,
                      data_equivalent, h2_table, h3_table)
from .report import Failure, Report

__all__ = [name for name in dir() if not name.startswith("_")]
