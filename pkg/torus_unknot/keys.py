# Keys of the JSON rendering of an unknotting plan
P = 'p'
Q = 'q'
D = 'd'  # gcd(p, q), the number of closure components
UNKNOTTING_NUMBER = 'unknotting_number'
POSITIONS = 'positions'  # 1-based crossing positions, sorted

# Provenance refers to a list of records, one per position
# {'position': <int>, 'step': <i>, 'source': <source>, 'copy': <j or null>}
PROVENANCE = 'provenance'
POSITION = 'position'
STEP = 'step'
SOURCE = 'source'
COPY = 'copy'

# Trace refers to the list of recursion steps
# {'step': <i>, 'p': <p_i>, 'q': <q_i>, 'm': <m_i>, 'a': <a_i>, 'parity': 'odd' | 'even'}
TRACE = 'trace'
M = 'm'
A = 'a'
PARITY = 'parity'
TERMINAL = 'terminal'

# True when the positions index reverse(B(p, q)) instead of B(p, q)
MIRRORED = 'mirrored'

# Verdict rendering
STATUS = 'status'
COMPONENTS = 'components'
EVIDENCE = 'evidence'
