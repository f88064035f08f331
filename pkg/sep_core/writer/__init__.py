from .writer import write_state, state_to_dict, write_records, RECORD_FIELDS

__all__ = ['write_state', 'state_to_dict', 'write_records', 'RECORD_FIELDS']
