"""Errors raised across the workbench"""


class AlphabetError(ValueError):
    """A generator is unknown to, or clashes with, the alphabet it is used over"""


class ParseError(ValueError):
    """Malformed word, presentation or trace text"""


class MoveError(ValueError):
    """A move is not valid against the presentation it is applied to"""


class ReplayError(MoveError):
    """A move inside a trace failed during replay"""

    def __init__(self, message: str, move_index: int):
        """A move inside a trace failed during replay

        Args:
            message: Description of the failure
            move_index: 1-based position of the failing move in the trace
        """
        super().__init__(message)
        self.move_index = move_index


class CertificateError(ValueError):
    """An area certificate does not multiply out to its target"""


class PlanError(ValueError):
    """A trivialization plan is inconsistent with its doubling spec"""


class FixtureError(ValueError):
    """Unknown fixture or invalid fixture parameters"""


class TowerOverflowError(ArithmeticError):
    """An exact integer would exceed the configured bit budget"""

    def __init__(self, bits: int, budget: int):
        super().__init__(f"Tower overflow: needs at least {bits} bits, budget is {budget}")
        self.bits = bits
        self.budget = budget
