"""Exception hierarchy shared by all formt modules."""


class FormtError(Exception):
    """Base class for all errors raised by this package."""

    code = "FormtError"

    def detail(self) -> dict:
        return {}


class EmptyInputError(FormtError):
    code = "EmptyInput"


class LogicSyntaxError(FormtError):
    """Bad token or structure in the conventional logic syntax."""

    code = "SyntaxError"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column

    def detail(self) -> dict:
        return {"line": self.line, "column": self.column}


class UnsupportedQuantifierError(LogicSyntaxError):
    code = "UnsupportedQuantifier"


class UnboundQuantifierError(LogicSyntaxError):
    code = "UnboundQuantifier"


class UnbalancedBracketError(FormtError):
    code = "UnbalancedBracket"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position

    def detail(self) -> dict:
        return {"position": self.position}


class BadAtomError(FormtError):
    code = "BadAtom"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position

    def detail(self) -> dict:
        return {"position": self.position}


class UnboundVariableError(FormtError):
    code = "UnboundVariable"

    def __init__(self, names):
        self.names = sorted(names)
        super().__init__("unbound variable(s): " + ", ".join(self.names))

    def detail(self) -> dict:
        return {"names": self.names}


class TooManyVariablesError(FormtError):
    code = "TooManyVariables"

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} variables exceed equivalence cap {cap}")
        self.count = count
        self.cap = cap

    def detail(self) -> dict:
        return {"count": self.count, "cap": self.cap}


class InvalidPathError(FormtError):
    code = "InvalidPath"

    def __init__(self, path):
        super().__init__(f"no node at path {list(path)}")
        self.path = tuple(path)

    def detail(self) -> dict:
        return {"path": list(self.path)}


class SchemaError(FormtError):
    code = "SchemaError"

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} (at {path})")
        self.path = path

    def detail(self) -> dict:
        return {"path": self.path}


class DuplicateTestIdError(FormtError):
    code = "DuplicateTestId"

    def __init__(self, test_id: str):
        super().__init__(f"duplicate test id {test_id!r}")
        self.test_id = test_id

    def detail(self) -> dict:
        return {"id": self.test_id}


class DanglingMutantRefError(FormtError):
    code = "DanglingMutantRef"

    def __init__(self, mutant_id: str, path):
        super().__init__(f"mutant {mutant_id!r} targets missing node {list(path)}")
        self.mutant_id = mutant_id
        self.path = tuple(path)

    def detail(self) -> dict:
        return {"mutant": self.mutant_id, "path": list(self.path)}
