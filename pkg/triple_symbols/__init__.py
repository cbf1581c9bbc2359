# Triple Symbols - triple power residue symbols, Milnor invariants and
# mod-l Galois polylogarithms of prime triples

__version__ = "1.0.0"
