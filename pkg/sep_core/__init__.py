from .matlin import DensityState, SubsystemDims, trace_norm, partial_trace
from .gptops import GptOpSet, gpt_transform, realign, partial_transpose, kron_decompose
from .criteria import (
    ReductionParams,
    CriterionVerdict,
    evaluate,
    evaluate_all_Y,
    ppt_check,
    reduction_check,
    realignment_check,
)
from .states import LabeledState, werner, horodecki_3x3, random_separable, load_state, save_state
from .sweep import Axis, GridSpec, SweepRecord, run_sweep, find_threshold, emit

__all__ = [
    'DensityState', 'SubsystemDims', 'trace_norm', 'partial_trace',
    'GptOpSet', 'gpt_transform', 'realign', 'partial_transpose', 'kron_decompose',
    'ReductionParams', 'CriterionVerdict', 'evaluate', 'evaluate_all_Y',
    'ppt_check', 'reduction_check', 'realignment_check',
    'LabeledState', 'werner', 'horodecki_3x3', 'random_separable', 'load_state', 'save_state',
    'Axis', 'GridSpec', 'SweepRecord', 'run_sweep', 'find_threshold', 'emit',
]
