"""Straight-line programs over abstract generator symbols.

An Slp is an immutable node in a DAG; shared subterms are stored once, so
products accumulated over many random-element steps stay small in memory.
Evaluation substitutes concrete images for the generator symbols and folds
the DAG bottom-up, with Pow nodes expanded by square-and-multiply.

Length uses a circuit cost model: Mul and Inv cost 1, Gen costs 0, and
Pow(a, n) costs (bitlength(n) - 1) + (popcount(n) - 1) square-and-multiply
steps, plus 1 if n < 0.
"""

GEN = "G"
MUL = "M"
INV = "I"
POW = "P"


class Slp:
    """One node of a straight-line program; also serves as the root handle."""

    __slots__ = ("op", "a", "b")

    def __init__(self, op, a, b=None):
        self.op = op
        self.a = a
        self.b = b

    @staticmethod
    def gen(i):
        return Slp(GEN, i)

    @staticmethod
    def one():
        """An SLP evaluating to the identity of any group."""
        return Slp(POW, Slp(GEN, 0), 0)

    def __mul__(self, other):
        return Slp(MUL, self, other)

    def inv(self):
        return Slp(INV, self)

    def __pow__(self, n):
        return Slp(POW, self, n)

    def __repr__(self):
        return f"<Slp {len(topo_order(self))} nodes>"


def topo_order(s):
    """Children-first ordering of the distinct nodes reachable from s."""
    order = []
    seen = set()
    stack = [(s, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in seen:
            continue
        if expanded:
            seen.add(id(node))
            order.append(node)
            continue
        stack.append((node, True))
        if node.op in (MUL,):
            stack.append((node.b, False))
            stack.append((node.a, False))
        elif node.op in (INV, POW):
            stack.append((node.a, False))
    return order


def evaluate(s, images, mul, inv, one=None):
    """Fold the DAG with the given group operations.

    images[i] is the value of generator i; mul/inv are the group operations;
    one is required only if a Pow-by-zero node occurs and defaults to
    images[0] * images[0]^-1.
    """
    val = {}
    for node in topo_order(s):
        if node.op == GEN:
            if not 0 <= node.a < len(images):
                raise IndexError(f"generator index {node.a} out of range")
            v = images[node.a]
        elif node.op == MUL:
            v = mul(val[id(node.a)], val[id(node.b)])
        elif node.op == INV:
            v = inv(val[id(node.a)])
        else:  # POW
            base = val[id(node.a)]
            n = node.b
            if n < 0:
                base = inv(base)
                n = -n
            if n == 0:
                v = one if one is not None else mul(images[0], inv(images[0]))
            else:
                v = None
                while n:
                    if n & 1:
                        v = base if v is None else mul(v, base)
                    n >>= 1
                    if n:
                        base = mul(base, base)
        val[id(node)] = v
    return val[id(s)]


def eval_matrices(s, images, F):
    """Evaluate into 4x4 matrices over F."""
    from .mat4 import IDENT, mat_inv, mat_mul
    return evaluate(s, images,
                    mul=lambda a, b: mat_mul(F, a, b),
                    inv=lambda a: mat_inv(F, a),
                    one=IDENT)


def substitute(s, subs):
    """Replace generator i by the Slp subs[i], preserving the DAG shape."""
    val = {}
    for node in topo_order(s):
        if node.op == GEN:
            v = subs[node.a]
        elif node.op == MUL:
            v = Slp(MUL, val[id(node.a)], val[id(node.b)])
        elif node.op == INV:
            v = Slp(INV, val[id(node.a)])
        else:
            v = Slp(POW, val[id(node.a)], node.b)
        val[id(node)] = v
    return val[id(s)]


def _pow_cost(n):
    if n < 0:
        return _pow_cost(-n) + 1
    if n <= 1:
        return 0
    return (n.bit_length() - 1) + (bin(n).count("1") - 1)


def length(s):
    """Circuit size of the folded DAG under the documented cost model."""
    total = 0
    for node in topo_order(s):
        if node.op in (MUL, INV):
            total += 1
        elif node.op == POW:
            total += _pow_cost(node.b)
    return total


def serialize(s):
    """Text form: one instruction per line, final line names the root."""
    order = topo_order(s)
    index = {id(node): i for i, node in enumerate(order)}
    lines = []
    for node in order:
        if node.op == GEN:
            lines.append(f"G {node.a}")
        elif node.op == MUL:
            lines.append(f"M {index[id(node.a)]} {index[id(node.b)]}")
        elif node.op == INV:
            lines.append(f"I {index[id(node.a)]}")
        else:
            lines.append(f"P {index[id(node.a)]} {node.b}")
    lines.append(f"R {len(order) - 1}")
    return "\n".join(lines)


def deserialize(text):
    """Parse the text form back into an Slp."""
    nodes = []
    root = None
    for line in text.strip().splitlines():
        parts = line.split()
        op = parts[0]
        if op == "G":
            nodes.append(Slp(GEN, int(parts[1])))
        elif op == "M":
            nodes.append(Slp(MUL, nodes[int(parts[1])], nodes[int(parts[2])]))
        elif op == "I":
            nodes.append(Slp(INV, nodes[int(parts[1])]))
        elif op == "P":
            nodes.append(Slp(POW, nodes[int(parts[1])], int(parts[2])))
        elif op == "R":
            root = nodes[int(parts[1])]
        else:
            raise ValueError(f"bad SLP instruction {line!r}")
    if root is None:
        raise ValueError("SLP text lacks a root line")
    return root


def mul_opt(a, b):
    """Product treating None as the identity (for incremental builders)."""
    if a is None:
        return b
    if b is None:
        return a
    return a * b
