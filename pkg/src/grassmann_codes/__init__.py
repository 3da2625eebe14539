"""Grassmann codes C(2, m) over small prime fields and their orbit-projection decoder."""
from .code import LinearCode, build_code, code_parameters
from .field import BigFieldCtx, UnsupportedParameters, build_field
from .list_decoder import OrbitListDecoder, orbit_list_decode, twist
from .orbit_code import OrbitCode, SparsePoly, allowed_exponent_set, build_orbit_code, eval_on_orbit, expand_f
from .orbits import (Orbit, Plane, act, count_nonsubfield_elements, enumerate_grassmannian,
                     gaussian_binomial, make_plane, orbit_decompose, stabilizer_size)
from .pipeline import Decoder, DecoderUnavailable, DecodeResult, build, build_decoder, decode, error_orbit_profile
from .rs import RsInstance, poly_eval_batch, rs_decode

__version__ = "0.1.0"
