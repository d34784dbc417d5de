"""Exact bounds and certificates for the degree-two entry of Gorenstein h-vectors."""

__version__ = "0.1.0"

from .binomial import BinomialExpansion, ShiftSpec, binom, eval_shift, expand, green_bound, macaulay_bound
from .osequence import HVector, is_osequence, is_unimodal, oracle_osequences
from .bounds import (BoundReport, Decomposition, Feasibility, NotOSequenceError, NotSymmetricError,
                     gorenstein_necessary, lower_bound, unimodality_table)
from .constructions import (AsymptoticRow, Lemma11Triple, asymptotic_table, lemma11_decompose, lift_hvector,
                            trivial_extension, upper_bound_h2)
from .apolarity import (CatalecticantMatrix, Form, catalecticant, hilbert_of_form, lift_form, search_form,
                        trivial_extension_form)
