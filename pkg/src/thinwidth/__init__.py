"""Width calculus for Morse words, braid-satellite blowups and tube graphs."""

from .errors import WidthError
from .gamma_graph import LoopAnalysis, TubeSpec, VertexClass, classify, find_unique_loop, load_spec, loop_word
from .morse_word import Letter, MorseWord, Validity, WidthProfile, bridge_number, format_word, parse, profile, width
from .satellite import BoundReport, BoundTerm, blowup, lower_bound, theorem_gap
from .word_ops import OpStep, apply_sequence, legal_steps, type1_delete, type2_swap

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundTerm",
    "Letter",
    "LoopAnalysis",
    "MorseWord",
    "OpStep",
    "TubeSpec",
    "Validity",
    "VertexClass",
    "WidthError",
    "WidthProfile",
    "apply_sequence",
    "blowup",
    "bridge_number",
    "classify",
    "find_unique_loop",
    "format_word",
    "legal_steps",
    "load_spec",
    "loop_word",
    "lower_bound",
    "parse",
    "profile",
    "theorem_gap",
    "type1_delete",
    "type2_swap",
    "width",
]
