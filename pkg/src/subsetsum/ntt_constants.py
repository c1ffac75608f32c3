"""Internal transform moduli for exact integer convolution.

Each modulus is a 62-bit prime ``q = c * 2**32 + 1``; ``GENERATORS`` holds a
primitive root of each, and ``ROOTS`` a primitive ``2**MAX_LOG_SIZE``-th root
of unity, ``GENERATOR ** ((q - 1) >> MAX_LOG_SIZE) mod q``.  The product of
the three moduli has 186 bits, comfortably above ``2**26 * (2**62)**2``, the
largest convolution coefficient the field code can produce.
"""

MAX_LOG_SIZE = 26
MAX_SIZE = 1 << MAX_LOG_SIZE

NTT_PRIMES = (
    4611685941117976577,  # 2^33 * 311 * 1726273 + 1
    4611685692009873409,  # 2^34 * 3 * 277 * 323027 + 1
    4611685606110527489,  # 2^37 * 479 * 70051 + 1
)

GENERATORS = (3, 19, 3)

ROOTS = (
    796102305161900281,
    2748015357361002047,
    4549595665501177206,
)
