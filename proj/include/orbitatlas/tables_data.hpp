#pragma once

// Embedded reference tables for the exceptional groups, shipped as TSV text
// and parsed once at startup. Columns are documented next to each table.

namespace orbitatlas::data {

// ambient, label, dim, special flag, character (PyCox style, '-' if absent),
// alternate character name ('-' if absent)
inline constexpr const char* kOrbitCatalog = R"(
# nilpotent orbits with dimensions, special flags and Springer characters
G2	0	0	1	phi_{1,6}	-
G2	A1	6	0	-	-
G2	Ã1	8	0	-	-
G2	G2(a1)	10	1	phi_{2,1}	-
G2	G2	12	1	phi_{1,0}	-
F4	0	0	1	1_4	-
F4	A1	16	0	-	-
F4	Ã1	22	1	4_5	-
F4	A1+Ã1	28	1	9_4	-
F4	A2	30	1	8_4	χ_{8,4}
F4	Ã2	30	1	8_2	χ_{8,2}
F4	A2+Ã1	34	0	-	-
F4	Ã2+A1	36	0	χ_{6,1}	-
F4	B2	36	0	χ_{9,2}	-
F4	C3(a1)	38	0	-	-
F4	F4(a3)	40	1	12	-
F4	B3	42	1	8_1	χ_{8,1}
F4	C3	42	1	8_3	χ_{8,3}
F4	F4(a2)	44	1	9_1	φ_{9,2}
F4	F4(a1)	46	1	4_2	-
F4	F4	48	1	1_1	-
E6	0	0	1	1_p'	-
E6	A1	22	1	6_p'	-
E6	2A1	32	1	20_p'	-
E6	3A1	40	0	-	-
E6	A2	42	1	30_p'	-
E6	A2+A1	46	1	64_p'	-
E6	2A2	48	1	24_p'	-
E6	A2+2A1	50	1	60_p'	-
E6	A3	52	1	81_p'	-
E6	2A2+A1	54	0	-	-
E6	A3+A1	56	0	-	-
E6	D4(a1)	58	1	80_s	-
E6	A4	60	1	81_p	-
E6	D4	60	1	24_p	-
E6	A4+A1	62	1	60_p	-
E6	A5	64	0	-	-
E6	D5(a1)	64	1	64_p	-
E6	E6(a3)	66	1	30_p	-
E6	D5	68	1	20_p	-
E6	E6(a1)	70	1	6_p	-
E6	E6	72	1	1_p	-
E7	0	0	1	1_a'	-
E7	A1	34	1	7_a	-
E7	2A1	52	1	27_a'	-
E7	(3A1)''	54	1	21_b	-
E7	(3A1)'	64	0	-	-
E7	A2	66	1	56_a	-
E7	4A1	70	0	-	-
E7	A2+A1	76	1	120_a'	-
E7	A2+2A1	82	1	189_b	-
E7	A3	84	1	210_a'	-
E7	2A2	84	1	168_a'	-
E7	A2+3A1	84	1	105_b'	-
E7	(A3+A1)''	86	1	189_c	-
E7	2A2+A1	90	0	-	-
E7	(A3+A1)'	92	0	-	-
E7	D4(a1)	94	1	315_a	-
E7	A3+2A1	94	0	216_a	-
E7	D4	96	1	105_c'	-
E7	D4(a1)+A1	96	1	405_a'	-
E7	A3+A2	98	1	378_a	-
E7	A4	100	1	420_a'	-
E7	A3+A2+A1	100	1	210_b'	-
E7	(A5)''	102	1	105_c	-
E7	D4+A1	102	0	84_a	-
E7	A4+A1	104	1	512_a'	-
E7	D5(a1)	106	1	420_a	-
E7	A4+A2	106	1	210_b	-
E7	(A5)'	108	0	216_a'	-
E7	A5+A1	108	0	70_a'	-
E7	D5(a1)+A1	108	1	378_a'	-
E7	D6(a2)	110	0	280_b	-
E7	E6(a3)	110	1	405_a	-
E7	D5	112	1	189_c'	-
E7	E7(a5)	112	1	315_a'	-
E7	A6	114	1	105_b	-
E7	D5+A1	114	1	168_a	-
E7	D6(a1)	114	1	210_a	-
E7	E7(a4)	116	1	189_b'	-
E7	D6	118	0	35_b	-
E7	E6(a1)	118	1	120_a	-
E7	E6	120	1	21_b'	-
E7	E7(a3)	120	1	56_a'	-
E7	E7(a2)	122	1	27_a	-
E7	E7(a1)	124	1	7_a'	-
E7	E7	126	1	1_a	-
E8	0	0	1	1_x'	-
E8	A1	58	1	8_z'	-
E8	2A1	92	1	35_x'	-
E8	3A1	112	0	-	-
E8	A2	114	1	112_z'	-
E8	4A1	128	0	-	-
E8	A2+A1	136	1	210_x'	-
E8	A2+2A1	146	1	560_z'	-
E8	A3	148	1	567_x'	-
E8	A2+3A1	154	0	-	-
E8	2A2	156	1	700_x'	-
E8	2A2+A1	162	0	-	-
E8	A3+A1	164	0	-	-
E8	D4(a1)	166	1	1400_z'	-
E8	D4	168	1	525_x'	-
E8	2A2+2A1	168	0	-	-
E8	A3+2A1	172	0	-	-
E8	D4(a1)+A1	176	1	1400_x'	-
E8	A3+A2	178	1	3240_z'	-
E8	A4	180	1	2268_x'	-
E8	A3+A2+A1	182	0	-	-
E8	D4(a1)+A2	184	1	2240_x'	-
E8	D4+A1	184	0	700_xx'	-
E8	A4+A1	188	1	4096_x'	-
E8	2A3	188	0	-	-
E8	D5(a1)	190	1	2800_z'	-
E8	A4+2A1	192	1	4200_x'	-
E8	A4+A2	194	1	4536_z'	-
E8	A5	196	0	-	-
E8	D5(a1)+A1	196	1	6075_x'	-
E8	A4+A2+A1	196	1	2835_x'	-
E8	D4+A2	198	1	4200_z'	-
E8	E6(a3)	198	1	5600_z'	-
E8	D5	200	1	2100_y	-
E8	A4+A3	200	0	-	-
E8	A5+A1	202	0	-	-
E8	D5(a1)+A2	202	0	-	-
E8	D6(a2)	204	0	-	-
E8	E6(a3)+A1	204	0	-	-
E8	E7(a5)	206	0	-	-
E8	E8(a7)	208	1	4480_y	-
E8	D5+A1	208	0	3200_x	-
E8	A6	210	1	4200_z	-
E8	D6(a1)	210	1	5600_z	-
E8	A6+A1	212	1	2835_x	-
E8	E7(a4)	212	1	6075_x	-
E8	E6(a1)	214	1	2800_z	-
E8	D5+A2	214	1	4536_z	-
E8	E6	216	1	525_x	-
E8	D7(a2)	216	1	4200_x	-
E8	D6	216	0	972_x	-
E8	E6(a1)+A1	218	1	4096_z	-
E8	A7	218	0	-	-
E8	E7(a3)	220	1	2268_x	-
E8	E8(b6)	220	1	2240_x	-
E8	D7(a1)	222	1	3240_z	-
E8	E6+A1	222	0	-	-
E8	E7(a2)	224	0	1344_x	-
E8	E8(a6)	224	1	1400_x	-
E8	E8(b5)	226	1	1400_z	-
E8	D7	226	0	-	-
E8	E7(a1)	228	1	567_x	-
E8	E8(a5)	228	1	700_x	-
E8	E8(b4)	230	1	560_z	-
E8	E8(a4)	232	1	210_x	-
E8	E7	232	0	84_x	-
E8	E8(a3)	234	1	112_z	-
E8	E8(a2)	236	1	35_x	-
E8	E8(a1)	238	1	8_z	-
E8	E8	240	1	1_x	-
)";

// special-orbit Lusztig-Spaltenstein duality pairs for E6 and E7 (both
// directions listed): group, orbit, dual
inline constexpr const char* kLsDualExceptional = R"(
E6	0	E6
E6	E6	0
E6	A1	E6(a1)
E6	E6(a1)	A1
E6	2A1	D5
E6	D5	2A1
E6	A2	E6(a3)
E6	E6(a3)	A2
E6	A2+A1	D5(a1)
E6	D5(a1)	A2+A1
E6	2A2	D4
E6	D4	2A2
E6	A2+2A1	A4+A1
E6	A4+A1	A2+2A1
E6	A3	A4
E6	A4	A3
E6	D4(a1)	D4(a1)
E7	0	E7
E7	E7	0
E7	A1	E7(a1)
E7	E7(a1)	A1
E7	2A1	E7(a2)
E7	E7(a2)	2A1
E7	(3A1)''	E6
E7	E6	(3A1)''
E7	A2	E7(a3)
E7	E7(a3)	A2
E7	A2+A1	E6(a1)
E7	E6(a1)	A2+A1
E7	A2+2A1	E7(a4)
E7	E7(a4)	A2+2A1
E7	2A2	D5+A1
E7	D5+A1	2A2
E7	A2+3A1	A6
E7	A6	A2+3A1
E7	A3	D6(a1)
E7	D6(a1)	A3
E7	(A3+A1)''	D5
E7	D5	(A3+A1)''
E7	D4(a1)	E7(a5)
E7	E7(a5)	D4(a1)
E7	D4(a1)+A1	E6(a3)
E7	E6(a3)	D4(a1)+A1
E7	A3+A2	D5(a1)+A1
E7	D5(a1)+A1	A3+A2
E7	A4	D5(a1)
E7	D5(a1)	A4
E7	A3+A2+A1	A4+A2
E7	A4+A2	A3+A2+A1
E7	A4+A1	A4+A1
E7	(A5)''	D4
E7	D4	(A5)''
)";

// Sommers duality: ambient, pseudo-Levi pair label, annihilator orbit.
// Merged from the per-group duality tables and every appendix row.
inline constexpr const char* kSommers = R"(
F4	B3	A2
F4	C3	Ã2
F4	A3	B2
F4	B4(a2)	B2
F4	A2+Ã2	Ã2+A1
F4	A2	B3
F4	2A1+Ã1	B3
F4	Ã2	C3
E6	A3	A4
E6	2A2	D4
E6	A2+A1	D5(a1)
E6	4A1	A5
E7	A6	A2+3A1
E7	(A5+A1)'	A3+2A1
E7	(A5+A1)''	D4(a1)
E7	E7(a5)	D4(a1)
E7	D6(a2)	D4(a1)
E7	E6(a3)	D4(a1)+A1
E7	(A5)'	D4(a1)+A1
E7	(A5)''	D4
E7	2A3	D4+A1
E7	D4	(A5)''
E7	3A2	A5+A1
E7	A3+3A1	(A5)'
E7	A3+A2	D5(a1)+A1
E7	D4(a1)+2A1	D5(a1)+A1
E7	(A3+2A1)'	D6(a2)
E7	(A3+2A1)''	E6(a3)
E7	D4(a1)+A1	E6(a3)
E7	(A3+A1)''	D5
E7	(A3+A1)'	E7(a5)
E7	2A2+A1	E7(a5)
E7	D4(a1)	E7(a5)
E7	(4A1)'	D6
E7	(4A1)''	E6(a1)
E7	A2+A1	E6(a1)
E7	A2	E7(a3)
E7	(3A1)'	E7(a3)
E7	(3A1)''	E6
E7	A4+A2	A3+A2+A1
E7	2A3+A1	A3+A2+A1
E7	A4	D5(a1)
E7	A3+A2+A1	A4+A2
E7	A3	D6(a1)
E7	2A2	D5+A1
E7	A2+3A1	A6
E7	D5+A1	2A2
E7	D6(a1)	A3
E7	D4+A1	A4
E7	D5(a1)	A4
E8	(A7)''	D4+A1
E8	(A7)'	D4(a1)+A2
E8	E8(b6)	D4(a1)+A2
E8	E6(a1)+A2	D4(a1)+A2
E8	(A5+A1)''	D5+A1
E8	(A5+A1)'	E8(a7)
E8	E7(a5)	E8(a7)
E8	E6(a3)+A1	E8(a7)
E8	D5(a1)+A2	E8(a7)
E8	D6(a2)	E8(a7)
E8	A4+A3	E8(a7)
E8	E8(a7)	E8(a7)
E8	(2A3)''	D6
E8	(2A3)'	D7(a2)
E8	A4+2A1	D7(a2)
E8	D4	E6
E8	(A3+2A1)''	E7(a2)
E8	(A3+2A1)'	E8(a6)
E8	2A2+2A1	E8(a6)
E8	D4(a1)+A1	E8(a6)
E8	(4A1)''	E7
E8	(4A1)'	E8(a4)
E8	A2+A1	E8(a4)
E8	A8	2A2+2A1
E8	A6+A1	A4+A2+A1
E8	A6	D4+A2
E8	A5+A2	E6(a3)+A1
E8	A5+A2+A1	A5+A1
E8	A5	D6(a1)
E8	A4+A2+A1	A6+A1
E8	A4+A2	D5+A2
E8	A4+A1	E6(a1)+A1
E8	A4	E7(a3)
E8	2A3+A1	D5+A2
E8	A3+A2+2A1	A7
E8	A3+A2+A1	E8(b6)
E8	A3+A2	D7(a1)
E8	A3+3A1	D7(a1)
E8	A3+A1	E8(b5)
E8	A3	E7(a1)
E8	3A2+A1	E8(b6)
E8	3A2	E6+A1
E8	2A2+A1	E8(b5)
E8	2A2	E8(a5)
E8	A2+4A1	D7
E8	A2+3A1	E8(a5)
E8	E7(a4)	D5(a1)+A1
E8	E6(a3)	D6(a1)
E8	E6(a1)+A1	A4+A1
E8	E6	D4
E8	D8(a5)	D6(a2)
E8	D6(a1)+A1	D5(a1)+A1
E8	D6(a1)	E6(a3)
E8	D5+A3	2A3
E8	D5+2A1	A5
E8	D5+A1	E6(a3)
E8	D5	D5
E8	D5(a1)+A3	D5(a1)+A2
E8	D5(a1)+A1	E7(a4)
E8	D5(a1)	E6(a1)
E8	D4+A3	D6(a2)
E8	D4+A2	A6
E8	D4+2A1	E7(a4)
E8	D4+A1	E6(a1)
E8	D4(a1)+A3	D5+A2
E8	D4(a1)+A2	E8(b6)
E8	D4(a1)+2A1	D7(a1)
E8	D4(a1)	E8(b5)
E8	2A4	A4+A3
E8	D5(a1)+2A1	A6
E8	E6(a3)+A2	E6(a3)+A1
)";

// decorated rows from the Sommers/weighted-diagram tables: ambient,
// pseudo-Levi pair label, saturation Bala-Carter label, weighted diagram
inline constexpr const char* kDecoratedDiagrams = R"(
F4	B3	B3	2,2,0,0
F4	C3	C3	1,0,1,2
F4	A3	B2	2,0,0,1
F4	B4(a2)	F4(a3)	0,2,0,0
F4	A2+Ã2	F4(a3)	0,2,0,0
F4	A2	A2	2,0,0,0
F4	2A1+Ã1	A2	2,0,0,0
F4	Ã2	Ã2	0,0,0,2
E7	(A5+A1)'	E6(a3)	0,0,2,0,0,2,0
E7	(A5+A1)''	A5+A1	1,0,0,1,0,1,2
E7	E7(a5)	E7(a5)	0,0,0,2,0,0,2
E7	D6(a2)	D6(a2)	0,1,1,0,1,0,2
E7	E6(a3)	E6(a3)	0,0,2,0,0,2,0
E7	(A5)'	(A5)'	1,0,0,1,0,2,0
E7	(A5)''	(A5)''	2,0,0,0,0,2,2
E7	2A3	A4	2,0,0,0,0,2,0
E7	D4	D4	2,0,2,0,0,0,0
E7	3A2	D4(a1)	0,0,2,0,0,0,0
E7	A3+3A1	D4(a1)+A1	0,1,1,0,0,0,1
E7	A3+A2	A3+A2	0,0,0,1,0,1,0
E7	D4(a1)+2A1	A3+A2	0,0,0,1,0,1,0
E7	(A3+2A1)'	D4(a1)	0,0,2,0,0,0,0
E7	(A3+2A1)''	(A3+2A1)''	1,0,0,0,1,0,1
E7	D4(a1)+A1	D4(a1)+A1	0,1,1,0,0,0,1
E7	(A3+A1)''	(A3+A1)''	2,0,0,0,0,0,2
E7	(A3+A1)'	(A3+A1)'	1,0,0,1,0,0,0
E7	2A2+A1	2A2+A1	0,0,1,0,0,1,0
E7	D4(a1)	D4(a1)	0,0,2,0,0,0,0
E7	(4A1)'	A2	2,0,0,0,0,0,0
E7	(4A1)''	(4A1)''	0,1,0,0,0,0,1
E7	A2+A1	A2+A1	1,0,0,0,0,1,0
E7	A2	A2	2,0,0,0,0,0,0
E7	(3A1)'	(3A1)'	0,0,1,0,0,0,0
E7	(3A1)''	(3A1)''	0,0,0,0,0,0,2
E8	(A7)''	E6(a1)	2,0,0,0,0,2,0,2
E8	(A7)'	(A7)'	1,0,0,1,0,1,1,0
E8	E8(b6)	E8(b6)	0,0,0,2,0,0,0,2
E8	E6(a1)+A2	E8(b6)	0,0,0,2,0,0,0,2
E8	(A5+A1)''	E6(a3)	2,0,0,0,0,0,2,0
E8	(A5+A1)'	(A5+A1)'	1,0,0,1,0,0,0,1
E8	E7(a5)	E7(a5)	0,0,0,1,0,1,0,0
E8	E6(a3)+A1	E6(a3)+A1	1,0,0,0,1,0,1,0
E8	D5(a1)+A2	D5(a1)+A2	0,0,1,0,0,1,0,1
E8	D6(a2)	D6(a2)	0,1,1,0,0,0,1,0
E8	A4+A3	A4+A3	0,0,0,1,0,0,1,0
E8	E8(a7)	E8(a7)	0,0,0,0,2,0,0,0
E8	(2A3)''	A4	2,0,0,0,0,0,0,2
E8	(2A3)'	(2A3)'	1,0,0,0,1,0,0,0
E8	A4+2A1	A4+2A1	0,0,0,1,0,0,0,1
E8	D4	D4	0,0,0,0,0,0,2,2
E8	(A3+2A1)''	D4(a1)	0,0,0,0,0,0,2,0
E8	(A3+2A1)'	(A3+2A1)'	0,0,1,0,0,0,0,1
E8	2A2+2A1	2A2+2A1	0,0,0,0,1,0,0,0
E8	D4(a1)+A1	D4(a1)+A1	0,1,0,2,0,0,1,0
E8	(4A1)''	A2	0,0,0,0,0,0,0,2
E8	(4A1)'	(4A1)'	0,1,0,0,0,0,0,0
E8	A2+A1	A2+A1	1,0,0,0,0,0,0,1
)";

// ambiguous Bala-Carter labels needing a prime decoration, per ambient
inline constexpr const char* kAmbiguousLabels = R"(
E7	A5
E7	A5+A1
E7	4A1
E7	3A1
E7	A3+2A1
E7	A3+A1
E8	A7
E8	A5+A1
E8	4A1
E8	2A3
E8	A3+2A1
)";

// representatives of decorated pseudo-Levi classes inside the standard
// models, as subsets of the extended Dynkin diagram (node 0 = -highest root),
// components separated by ';'
inline constexpr const char* kDecoratedReps = R"(
E7	(A5)''	2,4,5,6,7
E7	(A5+A1)''	2,4,5,6,7;1
E7	(4A1)''	2;3;5;7
E7	(3A1)''	2;5;7
E7	(A3+2A1)''	5,6,7;2;3
E7	(A3+A1)''	2,4,5;7
E7	(A5)'	1,3,4,5,6
E7	(A5+A1)'	3,4,5,6,7;0
E7	(4A1)'	0;3;5;7
E7	(3A1)'	0;3;5
E7	(A3+2A1)'	0,1,3;5;7
E7	(A3+A1)'	0,1,3;5
E8	(A7)''	2,4,5,6,7,8,0
E8	(A5+A1)''	5,6,7,8,0;2
E8	(4A1)''	2;5;7;0
E8	(2A3)''	2,4,5;7,8,0
E8	(A3+2A1)''	2,4,5;7;0
E8	(A7)'	1,3,4,5,6,7,8
E8	(A5+A1)'	1,3,4,5,6;8
E8	(4A1)'	1;4;6;8
E8	(2A3)'	1,3,4;6,7,8
E8	(A3+2A1)'	1,3,4;6;8
)";

// template realizations of the pseudo-maximal subsystems used by the
// appendix tables, as extended-diagram node subsets, components ';' separated
inline constexpr const char* kTemplates = R"(
taba7	E7	0,1,3,4,5,6,7
taba5a2	E7	2,4,5,6,7;0,1
taba3a3a1	E7	0,1,3;5,6,7;2
tabd6a1	E7	0,1,3,4,2,5;7
tabe6	E7	1,2,3,4,5,6
taba8	E8	1,3,4,5,6,7,8,0
taba7a1	E8	2,4,5,6,7,8,0;1
taba5a2a1	E8	5,6,7,8,0;1,3;2
taba4a4	E8	1,3,4,2;6,7,8,0
tabd8	E8	3,4,2,5,6,7,8,0
tabd5a3	E8	1,3,4,5,2;7,8,0
tabe6a2	E8	1,3,4,5,6,2;8,0
tabe7a1	E8	1,2,3,4,5,6,7;0
)";

// the a-function on classical Weyl groups by special partition:
// type, rank, partition, a
inline constexpr const char* kAValues = R"(
A	1	2	0
A	1	1,1	1
A	2	3	0
A	2	2,1	1
A	2	1,1,1	3
A	3	4	0
A	3	3,1	1
A	3	2,2	2
A	3	2,1,1	3
A	3	1,1,1,1	6
A	4	5	0
A	4	4,1	1
A	4	3,2	2
A	4	3,1,1	3
A	4	2,2,1	4
A	4	2,1,1,1	6
A	4	1,1,1,1,1	10
A	5	6	0
A	5	5,1	1
A	5	4,2	2
A	5	4,1,1	3
A	5	3,3	3
A	5	3,2,1	4
A	5	3,1,1,1	6
A	5	2,2,2	6
A	5	2,2,1,1	7
A	5	2,1,1,1,1	10
A	5	1,1,1,1,1,1	15
A	7	8	0
A	7	7,1	1
A	7	6,2	2
A	7	6,1,1	3
A	7	5,3	3
A	7	5,2,1	4
A	7	4,4	4
A	7	4,3,1	5
A	7	5,1,1,1	6
A	7	4,2,2	6
A	7	4,2,1,1	7
A	7	3,3,2	7
A	7	3,3,1,1	8
A	7	3,2,2,1	9
A	7	4,1,1,1,1	10
A	7	3,2,1,1,1	11
A	7	2,2,2,2	12
A	7	2,2,2,1,1	13
A	7	3,1,1,1,1,1	15
A	7	2,2,1,1,1,1	16
A	7	2,1,1,1,1,1,1	21
A	7	1,1,1,1,1,1,1,1	28
A	8	9	0
A	8	8,1	1
A	8	7,2	2
A	8	7,1,1	3
A	8	6,3	3
A	8	6,2,1	4
A	8	5,4	4
A	8	5,3,1	5
A	8	5,2,2	6
A	8	4,4,1	6
A	8	6,1,1,1	6
A	8	5,2,1,1	7
A	8	4,3,2	7
A	8	4,3,1,1	8
A	8	3,3,3	9
A	8	4,2,2,1	9
A	8	3,3,2,1	10
A	8	5,1,1,1,1	10
A	8	4,2,1,1,1	11
A	8	3,2,2,2	12
A	8	3,3,1,1,1	12
A	8	3,2,2,1,1	13
A	8	4,1,1,1,1,1	15
A	8	3,2,1,1,1,1	16
A	8	2,2,2,2,1	16
A	8	2,2,2,1,1,1	18
A	8	3,1,1,1,1,1,1	21
A	8	2,2,1,1,1,1,1	22
A	8	2,1,1,1,1,1,1,1	28
A	8	1,1,1,1,1,1,1,1,1	36
B	3	7	0
B	3	5,1,1	1
B	3	3,3,1	2
B	3	3,2,2	3
B	3	3,1,1,1,1	4
B	3	1,1,1,1,1,1,1	9
C	3	6	0
C	3	4,2	1
C	3	3,3	2
C	3	2,2,2	3
C	3	2,2,1,1	4
C	3	1,1,1,1,1,1	9
C	4	8	0
C	4	6,2	1
C	4	4,4	2
C	4	4,2,2	3
C	4	4,2,1,1	4
C	4	3,3,1,1	5
C	4	2,2,2,2	6
C	4	2,2,1,1,1,1	9
C	4	1,1,1,1,1,1,1,1	16
D	5	9,1	0
D	5	7,3	1
D	5	7,1,1,1	2
D	5	5,5	2
D	5	5,3,1,1	3
D	5	4,4,1,1	4
D	5	3,3,3,1	5
D	5	5,1,1,1,1,1	6
D	5	3,3,2,2	6
D	5	3,3,1,1,1,1	7
D	5	2,2,2,2,1,1	10
D	5	3,1,1,1,1,1,1,1	12
D	5	2,2,1,1,1,1,1,1	13
D	5	1,1,1,1,1,1,1,1,1,1	20
D	6	11,1	0
D	6	9,3	1
D	6	9,1,1,1	2
D	6	7,5	2
D	6	7,3,1,1	3
D	6	6,6	3
D	6	5,5,1,1	4
D	6	5,3,3,1	5
D	6	7,1,1,1,1,1	6
D	6	5,3,2,2	6
D	6	4,4,3,1	6
D	6	5,3,1,1,1,1	7
D	6	4,4,2,2	7
D	6	3,3,3,3	8
D	6	4,4,1,1,1,1	8
D	6	3,3,3,1,1,1	9
D	6	3,3,2,2,1,1	10
D	6	5,1,1,1,1,1,1,1	12
D	6	3,3,1,1,1,1,1,1	13
D	6	2,2,2,2,2,2	15
D	6	2,2,2,2,1,1,1,1	16
D	6	3,1,1,1,1,1,1,1,1,1	20
D	6	2,2,1,1,1,1,1,1,1,1	21
D	6	1,1,1,1,1,1,1,1,1,1,1,1	30
D	8	15,1	0
D	8	13,3	1
D	8	13,1,1,1	2
D	8	11,5	2
D	8	11,3,1,1	3
D	8	9,7	3
D	8	9,5,1,1	4
D	8	8,8	4
D	8	9,3,3,1	5
D	8	7,7,1,1	5
D	8	11,1,1,1,1,1	6
D	8	9,3,2,2	6
D	8	7,5,3,1	6
D	8	9,3,1,1,1,1	7
D	8	7,5,2,2	7
D	8	6,6,3,1	7
D	8	7,3,3,3	8
D	8	7,5,1,1,1,1	8
D	8	6,6,2,2	8
D	8	5,5,5,1	8
D	8	7,3,3,1,1,1	9
D	8	6,6,1,1,1,1	9
D	8	5,5,3,3	9
D	8	7,3,2,2,1,1	10
D	8	5,5,3,1,1,1	10
D	8	5,5,2,2,1,1	11
D	8	9,1,1,1,1,1,1,1	12
D	8	5,3,3,3,1,1	12
D	8	4,4,4,4	12
D	8	7,3,1,1,1,1,1,1	13
D	8	4,4,3,3,1,1	13
D	8	5,5,1,1,1,1,1,1	14
D	8	5,3,2,2,2,2	15
D	8	5,3,3,1,1,1,1,1	15
D	8	4,4,2,2,2,2	16
D	8	4,4,3,1,1,1,1,1	16
D	8	5,3,2,2,1,1,1,1	16
D	8	3,3,3,3,3,1	16
D	8	4,4,2,2,1,1,1,1	17
D	8	3,3,3,3,2,2	17
D	8	3,3,3,3,1,1,1,1	18
D	8	7,1,1,1,1,1,1,1,1,1	20
D	8	5,3,1,1,1,1,1,1,1,1	21
D	8	3,3,2,2,2,2,1,1	21
D	8	4,4,1,1,1,1,1,1,1,1	22
D	8	3,3,3,1,1,1,1,1,1,1	23
D	8	3,3,2,2,1,1,1,1,1,1	24
D	8	2,2,2,2,2,2,2,2	28
D	8	2,2,2,2,2,2,1,1,1,1	29
D	8	5,1,1,1,1,1,1,1,1,1,1,1	30
D	8	3,3,1,1,1,1,1,1,1,1,1,1	31
D	8	2,2,2,2,1,1,1,1,1,1,1,1	34
D	8	3,1,1,1,1,1,1,1,1,1,1,1,1,1	42
D	8	2,2,1,1,1,1,1,1,1,1,1,1,1,1	43
D	8	1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1	56
)";

} // namespace orbitatlas::data
