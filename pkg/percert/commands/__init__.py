from . import construct, dimw, formula, me, percolate, verify, witness

COMMANDS = [me, dimw, construct, formula, witness, percolate, verify]

__all__ = ["COMMANDS"]
