from field.modes import ModeSet, build_mode_set
from field.report import ModeResult, FieldAmplitudeReport, mode_zigzag_check, \
    field_transition_report
