from typing import Literal

CRITERION_NAMES = Literal['grc', 'ppt', 'reduction', 'realignment', 'all']
BUILTIN_STATES = Literal['werner', 'horodecki', 'separable', 'random', 'maximally-mixed']
GEN_FAMILIES = Literal['werner', 'horodecki', 'separable', 'random']
COMPARE_FAMILIES = Literal['separable', 'random', 'werner', 'horodecki']
SWEEP_FAMILIES = Literal['werner-3', 'werner-d', 'horodecki', 'file']
OUTPUT_FORMATS = Literal['csv', 'json']
