"""Embedded witness elections for the three rules.

Each row: (id, C, S, V, U, k, computer_generated). ``None`` marks an absent
field (shown as "-"); ``""`` marks a present but empty one. Votes are
space separated; linear votes use ``>``, approval votes are bitstrings over
C followed by S.
"""

ROWS = (
    ('Plur.1', 'a b c', None, 'a>b>c b>a>c c>a>b', None, None, False),
    ('Plur.2', 'a b', None, 'a>b b>a', None, None, False),
    ('Plur.3', 'a b', None, 'a>b', None, None, False),
    ('Plur.4', 'a b c d', None, 'b>c>d>a d>a>c>b b>c>d>a a>c>b>d a>b>d>c d>a>b>c c>d>b>a d>a>c>b a>c>b>d d>c>b>a b>c>d>a a>b>d>c d>b>c>a a>d>c>b b>c>d>a c>a>b>d b>a>d>c a>c>d>b', None, None, True),
    ('Plur.5', 'a b c', None, 'a>b>c a>b>c a>c>b a>c>b b>a>c b>a>c b>a>c c>a>b c>a>b c>a>b', None, None, False),
    ('Plur.6', 'a b c', None, 'b>c>a c>b>a', None, None, False),
    ('Plur.7', 'a b c d', None, 'a>b>c>d c>d>a>b d>b>a>c', None, None, False),
    ('Plur.8', 'a b c', None, 'a>b>c a>b>c b>a>c b>a>c c>b>a', None, None, False),
    ('Plur.9', 'a b c d', None, 'a>b>c>d a>b>c>d a>b>c>d b>a>c>d c>b>a>d d>b>a>c', None, None, False),
    ('Plur.10', 'a b c', None, 'a>b>c a>b>c b>a>c c>a>b', None, None, False),
    ('Plur.11', 'a b c d e', None, 'c>b>a>d>e c>d>e>a>b a>d>b>c>e c>d>b>e>a c>b>e>d>a d>e>b>c>a d>b>e>c>a a>b>d>e>c e>c>b>d>a c>a>b>d>e b>e>a>c>d a>d>b>e>c d>a>c>e>b a>b>c>e>d c>d>e>b>a e>d>c>a>b e>d>a>b>c', None, None, False),
    ('Plur.12', 'a b c', None, 'a>b>c a>c>b b>a>c c>a>b', None, None, False),
    ('Plur.13', 'a b c', None, 'a>b>c a>c>b b>c>a c>b>a', None, None, False),
    ('Plur.14', 'a b c', None, 'a>b>c a>c>b b>c>a b>c>a b>c>a c>b>a c>b>a c>b>a', None, None, False),
    ('Plur.15', 'a b c', None, 'a>b>c a>c>b b>a>c b>c>a c>b>a', None, None, False),
    ('Plur.16', 'a b c', None, 'a>b>c a>c>b b>a>c b>c>a c>a>b', None, None, False),
    ('Plur.17', 'a b c', None, 'a>b>c a>c>b b>a>c b>c>a c>a>b c>b>a', None, None, False),
    ('Plur.18', 'a b c', None, 'a>b>c b>c>a b>c>a c>b>a c>b>a c>b>a', None, None, False),
    ('Plur.19', 'a b c d', None, 'a>b>c>d a>b>c>d a>b>c>d b>a>c>d c>b>a>d d>b>a>c', None, None, False),
    ('Plur.20', 'a b c d', None, 'a>c>b>d b>a>c>d b>a>c>d c>b>a>d d>c>b>a', None, None, False),
    ('Plur.21', 'a b c d', None, 'a>b>c>d a>b>c>d b>c>a>d b>c>a>d c>d>b>a', None, None, False),
    ('Plur.22', 'a b c d', None, 'a>b>c>d a>b>c>d a>b>c>d b>c>d>a c>b>d>a d>a>c>b d>b>c>a d>b>c>a', None, None, False),
    ('Plur.23', 'a b c', None, 'b>a>c b>a>c b>a>c b>a>c b>a>c b>a>c a>b>c a>b>c a>b>c a>b>c a>b>c c>b>a c>b>a c>b>a', None, None, False),
    ('Plur.24', 'a b c d', None, 'b>a>d>c b>a>d>c b>a>d>c b>a>d>c b>a>d>c c>a>b>d c>a>b>d c>a>b>d c>a>b>d d>a>b>c d>a>b>c', None, None, False),
    ('Plur.25', 'a b c d e f', None, 'd>e>b>f>c>a b>f>c>a>e>d b>e>c>a>d>f f>e>a>b>d>c b>a>e>d>f>c a>c>d>e>b>f c>e>f>b>a>d', None, None, True),
    ('Plur.26', 'a b c d e f g', None, 'c>d>g>f>b>e>a a>f>b>c>d>g>e g>c>a>d>e>b>f a>g>f>d>e>b>c e>g>a>d>b>c>f d>f>e>a>g>c>b f>a>d>g>e>c>b b>g>a>c>f>d>e a>c>g>b>f>d>e', None, None, True),
    ('Plur.27', 'a b', 'c', 'c>b>a', None, 1, False),
    ('Plur.28', 'a b', None, 'a>b', 'a>b', 1, False),
    ('Plur.29', 'a b', 'c', 'a>c>b', None, 1, False),
    ('Plur.30', 'a b', None, 'a>b a>b', None, 0, False),
    ('Plur.31', 'a b c d', None, 'b>c>d>a b>c>d>a a>b>c>d', None, 2, False),
    ('Plur.32', 'a b c d', None, 'a>b>c>d a>b>c>d a>b>c>d a>b>c>d a>b>c>d a>b>c>d b>c>d>a b>c>d>a b>c>d>a c>b>d>a c>b>d>a c>b>d>a d>b>c>a d>b>c>a d>b>c>a', None, 2, False),
    ('Plur.33', 'a', '', 'a', None, 0, False),
    ('Plur.34', 'a', None, 'a', None, 0, False),
    ('Plur.35', 'a', None, 'a', '', 0, False),
    ('Plur.36', 'a', '', 'a', None, None, False),
    ('Plur.37', 'a b', '', 'a>b b>a', None, 0, False),
    ('Plur.38', 'a b', None, 'a>b b>a', None, 0, False),
    ('Plur.39', 'a b', None, 'a>b b>a', '', 0, False),
    ('Plur.40', 'a b', '', 'a>b b>a', None, None, False),
    ('Plur.41', 'a b', None, 'b>a b>a', None, 1, False),
    ('Plur.42', 'a b', None, 'a>b a>b b>a', None, 1, False),
    ('Plur.43', 'a b', None, 'a>b b>a', None, 1, False),
    ('Plur.44', 'a b c', None, 'a>b>c b>c>a b>c>a c>b>a c>b>a', None, None, False),
    ('Plur.45', 'a b c', None, 'a>b>c b>c>a c>b>a', None, None, False),
    ('Plur.46', 'a b c', None, 'a>b>c b>c>a b>c>a b>c>a c>b>a c>b>a c>b>a', None, None, False),
    ('Plur.47', 'a b c d', None, 'c>b>a>d d>c>a>b b>a>d>c c>b>d>a a>b>c>d d>b>c>a a>d>b>c', None, None, True),
    ('Plur.48', 'a b c d e', None, 'a>c>b>d>e d>c>b>a>e c>d>b>e>a e>d>b>a>c a>d>b>e>c b>e>d>a>c a>d>e>b>c e>d>a>b>c c>a>e>d>b b>e>d>a>c d>c>e>b>a', None, None, True),
    ('Plur.49', 'a b c d', None, 'c>a>b>d b>a>c>d c>b>a>d b>d>c>a d>a>b>c c>b>d>a a>d>b>c a>b>d>c c>d>a>b', None, None, True),
    ('Plur.50', 'a b c d e', None, 'a>d>e>b>c e>c>b>a>d c>b>a>e>d e>a>d>b>c b>d>a>e>c e>a>b>d>c b>c>e>a>d d>c>b>a>e d>c>b>a>e', None, None, True),
    ('Veto.1', 'a b', None, 'a>b b>a', None, None, False),
    ('Veto.2', 'a b c', None, 'a>b>c a>b>c', None, None, False),
    ('Veto.3', 'a b c', None, 'a>b>c c>a>b c>b>a c>b>a', None, None, False),
    ('Veto.4', 'a b c', None, 'a>b>c', None, None, False),
    ('Veto.5', 'a b', None, 'a>b', None, None, False),
    ('Veto.6', 'a b', None, 'b>a', None, None, False),
    ('Veto.7', 'a b c', None, 'a>b>c a>c>b b>c>a b>c>a', None, None, False),
    ('Veto.8', 'a b c', None, 'a>b>c a>b>c c>a>b c>b>a c>b>a', None, None, False),
    ('Veto.9', 'a b c d', None, 'a>b>c>d a>b>c>d b>d>c>a', None, None, False),
    ('Veto.10', 'a b c', None, 'b>c>a c>b>a', None, None, False),
    ('Veto.11', 'a b c', None, 'b>a>c', None, None, False),
    ('Veto.12', 'a b c d', None, 'a>b>c>d b>c>d>a c>a>d>b', None, None, False),
    ('Veto.13', 'a b c', None, 'a>b>c a>b>c a>b>c c>a>b c>a>b c>b>a c>b>a', None, None, False),
    ('Veto.14', 'a b c d', None, 'c>d>a>b c>d>a>b d>b>a>c', None, None, False),
    ('Veto.15', 'a b c d', None, 'a>b>c>d a>b>c>d b>c>a>d c>a>b>d c>d>b>a', None, None, False),
    ('Veto.16', 'a b c d', None, 'a>b>c>d b>a>c>d b>a>c>d b>a>c>d c>b>a>d d>c>a>b d>c>a>b d>c>a>b d>c>b>a d>c>b>a', None, None, True),
    ('Veto.17', 'a b c', None, 'b>a>c c>a>b', None, None, False),
    ('Veto.18', 'a b c', None, 'a>b>c a>b>c a>b>c a>c>b a>c>b a>c>b b>c>a b>c>a', None, None, False),
    ('Veto.19', 'a b c d', None, 'a>b>c>d b>d>a>c c>d>a>b', None, None, False),
    ('Veto.20', 'a b c', None, 'a>b>c c>a>b', None, None, False),
    ('Veto.21', 'a b', 'c', 'b>a>c', None, 1, False),
    ('Veto.22', 'a b c', 'd', 'b>a>c>d', None, 1, False),
    ('Veto.23', 'a b', 'c', 'a>b>c', None, 1, False),
    ('Veto.24', 'a b', 'c', 'b>c>a c>b>a', None, 1, False),
    ('Veto.25', 'a b c d', None, 'd>c>a>b', None, 1, False),
    ('Veto.26', 'a b c', None, 'a>b>c a>b>c c>a>b c>b>a c>b>a', None, 0, False),
    ('Veto.27', 'a b c', None, 'a>c>b a>c>b', None, 1, False),
    ('Veto.28', 'a b c', None, 'c>a>b c>a>b', None, 1, False),
    ('Veto.29', 'a b', None, 'a>b', None, 1, False),
    ('Veto.30', 'a b c', None, 'c>b>a c>a>b b>a>c', None, 1, False),
    ('Veto.31', 'a b c', None, 'a>c>b a>c>b a>c>b c>b>a c>b>a', None, 1, False),
    ('Veto.32', 'a b c d', None, 'a>b>c>d a>b>c>d b>d>c>a', None, 0, False),
    ('Veto.33', 'a b c', None, 'b>c>a b>c>a b>a>c b>a>c a>c>b', None, 2, False),
    ('Veto.34', 'a b c', None, 'c>b>a c>b>a b>c>a', None, 1, False),
    ('Veto.35', 'a b c', None, 'c>a>b', None, 1, False),
    ('Veto.36', 'a b c', None, 'c>a>b', 'c>a>b', 1, False),
    ('Veto.37', 'a b', None, 'a>b', 'a>b', 1, False),
    ('Veto.38', 'a b', None, 'b>a', 'b>a', 1, False),
    ('Veto.39', 'a b c', 'd', 'd>c>a>b', None, None, False),
    ('Veto.40', 'a b', 'c', 'a>c>b a>b>c', None, None, False),
    ('Veto.41', 'a b', 'c', 'c>b>a', None, None, False),
    ('Veto.42', 'a b c', None, 'a>b>c a>c>b', None, None, False),
    ('Veto.43', 'a b c d', None, 'c>d>b>a a>b>c>d b>d>a>c b>d>c>a a>b>d>c a>b>d>c', None, None, True),
    ('Veto.44', 'a b c', None, 'a>b>c', '', 0, False),
    ('Veto.45', 'a b', None, 'a>b', None, 0, False),
    ('Veto.46', 'a b c d e', None, 'b>c>d>e>a b>c>d>e>a d>b>c>a>e e>b>c>a>d e>c>d>a>b e>b>d>a>c', None, 2, False),
    ('Appr.1', 'a b', None, '10', None, None, False),
    ('Appr.2', 'a b', None, '10 01', None, None, False),
    ('Appr.3', 'a b c', None, '101 110', None, None, False),
    ('Appr.4', 'a b c', None, '110 110 010 101 101 001', None, None, False),
    ('Appr.5', 'a b c', None, '100 011 011', None, None, False),
    ('Appr.6', 'a b c', None, '100 110 011 011', None, None, False),
    ('Appr.7', 'a b c', None, '100 100 100 100 100 110 010 010 010 010 001 001 001 001 001 001 001', None, None, False),
    ('Appr.8', 'a b c', None, '100 100 100 100 010 010 010 010 010 001 001 001', None, None, False),
    ('Appr.9', 'a b c d', None, '1001 1001 1001 1000 0100 0100 0100 0100 0100 0010 0010 0010 0010 0010', None, None, False),
    ('Appr.10', 'a b', None, '10', None, 0, False),
    ('Appr.11', 'a b', 'c', '111', None, 1, False),
    ('Appr.12', 'a b', 'c', '010', None, 1, False),
    ('Appr.13', 'a b', 'c', '100', None, 1, False),
    ('Appr.14', 'a b c', None, '111', None, 1, False),
    ('Appr.15', 'a b', None, '11', None, 1, False),
    ('Appr.16', 'a b c', None, '011', None, 1, False),
    ('Appr.17', 'a b c', None, '011 011', None, 1, False),
    ('Appr.18', 'a b c', None, '100 111', None, 1, False),
    ('Appr.19', 'a b c', None, '100 011', None, 1, False),
    ('Appr.20', 'a b', None, '10 01 01 01', None, 1, False),
    ('Appr.21', 'a b c d', None, '1000 0111 0111', None, 2, False),
    ('Appr.22', 'a b', None, '10 10 01', None, 2, False),
    ('Appr.23', 'a', None, '1', None, 1, False),
    ('Appr.24', 'a b', None, '01', '10', 1, False),
    ('Appr.25', 'a b', None, '10', '10', 1, False),
    ('Appr.26', 'a b', None, '01', '01', 1, False),
    ('Appr.27', 'a b', None, '10 01', '', 0, False),
    ('Appr.28', 'a b', 'c', '100', None, None, False),
    ('Appr.29', 'a b c', None, '101 110', None, 0, False),
    ('Appr.30', 'a b', '', '10 01', None, None, False),
    ('Appr.31', 'a b c d e f g h', None, '10111100 10111100 11100000 01000001 01000001 00010001 00001011 00000111 10111110 11011110', None, None, False),
    ('Appr.32', 'a b c d e f g h i j', None, '1110111100 1110111100 1110111100 1111000001 0001000001 0001000001 0001000001 0000100001 0000010011 0000001011 0000000111 1011111110 1101111110 1110111110', None, None, False),
)
