import typing as tp


class StateParseError(ValueError):
    """A state file could not be parsed; carries the location when known."""

    def __init__(self, message: str, *, line: tp.Optional[int] = None, column: tp.Optional[int] = None,
                 field: tp.Optional[str] = None):
        self.line = line
        self.column = column
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)
