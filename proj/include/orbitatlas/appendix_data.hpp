#pragma once

// GKdim / annihilator-variety rows for the pseudo-maximal subsystems,
// used as a bulk regression oracle. Columns: table id, ambient, GK dimension,
// special-representation factors, annihilator orbit.
//
// Factor syntax, '|'-separated in component order:
//   C4:2,2,1,1,1,1     classical factor with its special partition
//   A2~:3              short-root component (F4/G2 ambient)
//   D6:6,6:I           very even D partition with its numeral
//   @E7:A6             exceptional factor given by its special orbit

namespace orbitatlas::data {

inline constexpr const char* kAppendix = R"(
tabc4	F4	15	C4:2,2,1,1,1,1	A2
tabc4	F4	18	C4:2,2,2,2	B2
tabc4	F4	21	C4:4,2,2	B3
taba2a2	F4	18	A2:1,1,1|A2~:1,1,1	Ã2+A1
taba2a2	F4	21	A2:1,1,1|A2~:3	C3
taba2a2	F4	21	A2:3|A2~:1,1,1	B3
taba1a3	F4	18	A1:2|A3~:1,1,1,1	B2
taba1a3	F4	21	A1:2|A3~:2,1,1	B3
tabb3a1	F4	15	B3:1,1,1,1,1,1,1|A1~:2	Ã2
tabb3a1	F4	21	B3:3,3,1|A1~:1,1	B3
tabb3a1	F4	21	B3:3,2,2|A1~:2	C3
tabd5-1	E6	30	D5:3,3,2,2	A4
tabd5-1	E6	30	D5:5,1,1,1,1,1	A4
tabd5-1	E6	32	D5:4,4,1,1	D5(a1)
taba5a1	E6	30	A5:3,1,1,1|A1:2	A4
taba5a1	E6	30	A5:2,2,2|A1:2	D4
taba5a1	E6	32	A5:4,1,1|A1:1,1	D5(a1)
taba5a1	E6	32	A5:3,2,1|A1:2	D5(a1)
taba5a1	E6	32	A5:3,3|A1:1,1	A5
taba2a2a2	E6	30	A2:1,1,1|A2:1,1,1|A2:3	D4
taba2a2a2	E6	32	A2:1,1,1|A2:2,1|A2:3	D5(a1)
taba7	E7	42	A7:2,1,1,1,1,1,1	A2+3A1
taba7	E7	47	A7:2,2,1,1,1,1	A3+2A1
taba7	E7	48	A7:3,1,1,1,1,1	D4(a1)+A1
taba7	E7	50	A7:2,2,2,1,1	A3+A2+A1
taba7	E7	51	A7:2,2,2,2	D4+A1
taba7	E7	53	A7:4,1,1,1,1	D5(a1)
taba7	E7	54	A7:3,2,2,1	D5(a1)+A1
taba7	E7	55	A7:3,3,1,1	D6(a2)
taba7	E7	56	A7:4,2,1,1	E7(a5)
taba7	E7	56	A7:3,3,2	E7(a5)
taba7	E7	57	A7:5,1,1,1	D6(a1)
taba7	E7	57	A7:4,2,2	D5+A1
taba7	E7	59	A7:5,2,1	E6(a1)
taba7	E7	59	A7:4,4	D6
taba7	E7	60	A7:6,1,1	E7(a3)
taba7	E7	60	A7:5,3	E7(a3)
taba5a2	E7	47	A5:1,1,1,1,1,1|A2:2,1	D4(a1)
taba5a2	E7	48	A5:1,1,1,1,1,1|A2:3	D4
taba5a2	E7	50	A5:2,1,1,1,1|A2:1,1,1	A3+A2+A1
taba5a2	E7	53	A5:2,1,1,1,1|A2:3	D5(a1)
taba5a2	E7	54	A5:2,2,2|A2:1,1,1	A5+A1
taba5a2	E7	54	A5:3,1,1,1|A2:1,1,1	D5(a1)+A1
taba5a2	E7	55	A5:2,2,1,1|A2:2,1	E6(a3)
taba5a2	E7	56	A5:2,2,1,1|A2:3	D5
taba5a2	E7	56	A5:3,1,1,1|A2:2,1	E7(a5)
taba5a2	E7	56	A5:3,2,1|A2:1,1,1	E7(a5)
taba5a2	E7	56	A5:2,2,2|A2:2,1	E7(a5)
taba5a2	E7	57	A5:3,1,1,1|A2:3	D6(a1)
taba5a2	E7	57	A5:2,2,2|A2:3	D5+A1
taba5a2	E7	57	A5:4,1,1|A2:1,1,1	D5+A1
taba5a2	E7	57	A5:3,3|A2:1,1,1	A6
taba5a2	E7	59	A5:4,1,1|A2:2,1	E6(a1)
taba5a2	E7	59	A5:3,3|A2:2,1	E6(a1)
taba5a2	E7	59	A5:5,1|A2:1,1,1	E6(a1)
taba5a2	E7	59	A5:3,2,1|A2:3	E6(a1)
taba5a2	E7	60	A5:4,1,1|A2:3	E7(a3)
taba5a2	E7	60	A5:3,3|A2:3	E6
taba5a2	E7	60	A5:4,2|A2:2,1	E7(a3)
taba5a2	E7	60	A5:6|A2:1,1,1	E7(a3)
taba3a3a1	E7	50	A3:1,1,1,1|A3:1,1,1,1|A1:1,1	A3+A2+A1
taba3a3a1	E7	51	A3:1,1,1,1|A3:1,1,1,1|A1:2	D4+A1
taba3a3a1	E7	53	A3:1,1,1,1|A3:2,1,1|A1:1,1	A4+A2
taba3a3a1	E7	54	A3:1,1,1,1|A3:2,1,1|A1:2	D5(a1)+A1
taba3a3a1	E7	55	A3:1,1,1,1|A3:2,2|A1:2	D6(a2)
taba3a3a1	E7	55	A3:1,1,1,1|A3:3,1|A1:1,1	E6(a3)
taba3a3a1	E7	56	A3:1,1,1,1|A3:3,1|A1:2	E7(a5)
taba3a3a1	E7	56	A3:1,1,1,1|A3:4|A1:1,1	D5
taba3a3a1	E7	56	A3:2,1,1|A3:2,1,1|A1:1,1	E7(a5)
taba3a3a1	E7	57	A3:1,1,1,1|A3:4|A1:2	D6(a1)
taba3a3a1	E7	57	A3:2,1,1|A3:2,1,1|A1:2	D5+A1
taba3a3a1	E7	57	A3:2,2|A3:2,1,1|A1:1,1	A6
taba3a3a1	E7	59	A3:2,1,1|A3:3,1|A1:2	E6(a1)
taba3a3a1	E7	59	A3:2,1,1|A3:4|A1:1,1	E6(a1)
taba3a3a1	E7	59	A3:3,1|A3:2,2|A1:1,1	E6(a1)
taba3a3a1	E7	59	A3:2,2|A3:2,2|A1:2	D6
taba3a3a1	E7	60	A3:2,1,1|A3:4|A1:2	E7(a3)
taba3a3a1	E7	60	A3:3,1|A3:2,2|A1:2	E7(a3)
taba3a3a1	E7	60	A3:4|A3:2,2|A1:1,1	E6
taba3a3a1	E7	60	A3:3,1|A3:3,1|A1:1,1	E7(a3)
tabd6a1	E7	42	D6:3,1,1,1,1,1,1,1,1,1|A1:1,1	2A2
tabd6a1	E7	42	D6:2,2,1,1,1,1,1,1,1,1|A1:2	A3
tabd6a1	E7	47	D6:2,2,2,2,1,1,1,1|A1:2	D4(a1)
tabd6a1	E7	47	D6:2,2,2,2,2,2:I|A1:1,1	A3+2A1
tabd6a1	E7	47	D6:2,2,2,2,2,2:II|A1:1,1	D4(a1)
tabd6a1	E7	48	D6:2,2,2,2,2,2:I|A1:2	D4(a1)+A1
tabd6a1	E7	48	D6:2,2,2,2,2,2:II|A1:2	D4
tabd6a1	E7	50	D6:3,3,1,1,1,1,1,1|A1:2	A4
tabd6a1	E7	50	D6:5,1,1,1,1,1,1,1|A1:1,1	A4
tabd6a1	E7	51	D6:5,1,1,1,1,1,1,1|A1:2	(A5)''
tabd6a1	E7	53	D6:3,3,2,2,1,1|A1:2	D5(a1)
tabd6a1	E7	53	D6:3,3,3,1,1,1|A1:1,1	A4+A2
tabd6a1	E7	54	D6:3,3,3,1,1,1|A1:2	D5(a1)+A1
tabd6a1	E7	54	D6:4,4,1,1,1,1|A1:1,1	D5(a1)+A1
tabd6a1	E7	54	D6:3,3,3,3|A1:1,1	(A5)'
tabd6a1	E7	55	D6:4,4,1,1,1,1|A1:2	E6(a3)
tabd6a1	E7	55	D6:3,3,3,3|A1:2	E6(a3)
tabd6a1	E7	55	D6:5,3,1,1,1,1|A1:1,1	E6(a3)
tabd6a1	E7	55	D6:4,4,2,2:I|A1:1,1	D6(a2)
tabd6a1	E7	55	D6:4,4,2,2:II|A1:1,1	E6(a3)
tabd6a1	E7	56	D6:5,3,1,1,1,1|A1:2	E7(a5)
tabd6a1	E7	56	D6:4,4,2,2:I|A1:2	E7(a5)
tabd6a1	E7	56	D6:4,4,2,2:II|A1:2	D5
tabd6a1	E7	56	D6:7,1,1,1,1,1|A1:1,1	D5
tabd6a1	E7	56	D6:5,3,2,2|A1:1,1	E7(a5)
tabd6a1	E7	56	D6:4,4,3,1|A1:1,1	E7(a5)
tabd6a1	E7	57	D6:7,1,1,1,1,1|A1:2	D6(a1)
tabd6a1	E7	57	D6:5,3,2,2|A1:2	D6(a1)
tabd6a1	E7	57	D6:4,4,3,1|A1:2	D5+A1
tabd6a1	E7	57	D6:5,3,3,1|A1:1,1	A6
tabd6a1	E7	59	D6:7,3,1,1|A1:1,1	E6(a1)
tabd6a1	E7	59	D6:5,5,1,1|A1:2	E6(a1)
tabd6a1	E7	59	D6:6,6:I|A1:1,1	D6
tabd6a1	E7	59	D6:6,6:II|A1:1,1	E6(a1)
tabd6a1	E7	60	D6:7,3,1,1|A1:2	E7(a3)
tabd6a1	E7	60	D6:6,6:I|A1:2	E7(a3)
tabd6a1	E7	60	D6:6,6:II|A1:2	E6
tabd6a1	E7	60	D6:7,5|A1:1,1	E7(a3)
tabd6a1	E7	60	D6:9,1,1,1|A1:1,1	E6
tabe6	E7	48	@E6:A2	D4(a1)+A1
tabe6	E7	50	@E6:A2+A1	A4
tabe6	E7	51	@E6:2A2	(A5)''
tabe6	E7	53	@E6:A3	D5(a1)
tabe6	E7	56	@E6:D4(a1)	E7(a5)
tabe6	E7	57	@E6:A4	D6(a1)
tabe6	E7	57	@E6:D4	D5+A1
tabe6	E7	59	@E6:D5(a1)	E6(a1)
tabe6	E7	60	@E6:E6(a3)	E7(a3)
taba8	E8	84	A8:1,1,1,1,1,1,1,1,1	2A2+2A1
taba8	E8	92	A8:2,1,1,1,1,1,1,1	D4(a1)+A2
taba8	E8	98	A8:2,2,1,1,1,1,1	A4+A2+A1
taba8	E8	99	A8:3,1,1,1,1,1,1	D4+A2
taba8	E8	102	A8:2,2,2,1,1,1	E6(a3)+A1
taba8	E8	104	A8:3,2,1,1,1,1	E8(a7)
taba8	E8	104	A8:2,2,2,2,1	E8(a7)
taba8	E8	105	A8:4,1,1,1,1,1	D6(a1)
taba8	E8	107	A8:3,2,2,1,1	D5+A2
taba8	E8	108	A8:3,3,1,1,1	D7(a2)
taba8	E8	108	A8:3,2,2,2	D7(a2)
taba8	E8	109	A8:4,2,1,1,1	E6(a1)+A1
taba8	E8	110	A8:5,1,1,1,1	E7(a3)
taba8	E8	110	A8:3,3,2,1	E8(b6)
taba8	E8	111	A8:4,2,2,1	D7(a1)
taba8	E8	111	A8:3,3,3	E6+A1
taba8	E8	112	A8:4,3,1,1	E8(a6)
taba8	E8	113	A8:5,2,1,1	E8(b5)
taba8	E8	113	A8:4,3,2	E8(b5)
taba8	E8	114	A8:6,1,1,1	E7(a1)
taba8	E8	114	A8:5,2,2	E8(a5)
taba8	E8	114	A8:4,4,1	E8(a5)
taba8	E8	116	A8:5,4	E8(a4)
taba7a1	E8	92	A7:1,1,1,1,1,1,1,1|A1:2	D4+A1
taba7a1	E8	98	A7:2,1,1,1,1,1,1|A1:1,1	A4+A2+A1
taba7a1	E8	99	A7:2,1,1,1,1,1,1|A1:2	D4+A2
taba7a1	E8	104	A7:2,2,1,1,1,1|A1:2	D5+A1
taba7a1	E8	104	A7:3,1,1,1,1,1|A1:1,1	E8(a7)
taba7a1	E8	105	A7:3,1,1,1,1,1|A1:2	D6(a1)
taba7a1	E8	106	A7:2,2,2,1,1|A1:1,1	A6+A1
taba7a1	E8	107	A7:2,2,2,1,1|A1:2	D5+A2
taba7a1	E8	107	A7:2,2,2,2|A1:1,1	D5+A2
taba7a1	E8	108	A7:2,2,2,2|A1:2	D6
taba7a1	E8	108	A7:3,2,1,1,1|A1:1,1	D7(a2)
taba7a1	E8	109	A7:3,2,1,1,1|A1:2	E6(a1)+A1
taba7a1	E8	109	A7:4,1,1,1,1|A1:1,1	E6(a1)+A1
taba7a1	E8	110	A7:3,2,2,1|A1:1,1	E8(b6)
taba7a1	E8	110	A7:4,1,1,1,1|A1:2	E7(a3)
taba7a1	E8	111	A7:3,2,2,1|A1:2	D7(a1)
taba7a1	E8	111	A7:3,3,1,1|A1:1,1	D7(a1)
taba7a1	E8	112	A7:3,3,1,1|A1:2	E7(a2)
taba7a1	E8	112	A7:4,2,1,1|A1:1,1	E8(a6)
taba7a1	E8	112	A7:3,3,2|A1:1,1	E8(a6)
taba7a1	E8	113	A7:4,2,1,1|A1:2	E8(b5)
taba7a1	E8	113	A7:5,1,1,1|A1:1,1	E8(b5)
taba7a1	E8	113	A7:3,3,2|A1:2	E8(b5)
taba7a1	E8	113	A7:4,2,2|A1:1,1	E8(b5)
taba7a1	E8	114	A7:4,3,1|A1:1,1	E8(a5)
taba7a1	E8	114	A7:4,2,2|A1:2	E8(a5)
taba7a1	E8	114	A7:5,1,1,1|A1:2	E7(a1)
taba7a1	E8	116	A7:5,2,1|A1:2	E8(a4)
taba7a1	E8	116	A7:6,1,1|A1:1,1	E8(a4)
taba7a1	E8	116	A7:4,4|A1:2	E7
taba7a1	E8	116	A7:5,3|A1:1,1	E8(a4)
taba5a2a1	E8	101	A5:1,1,1,1,1,1|A2:1,1,1|A1:1,1	A5+A1
taba5a2a1	E8	102	A5:1,1,1,1,1,1|A2:1,1,1|A1:2	E6(a3)+A1
taba5a2a1	E8	104	A5:1,1,1,1,1,1|A2:2,1|A1:2	E8(a7)
taba5a2a1	E8	104	A5:1,1,1,1,1,1|A2:3|A1:1,1	D5+A1
taba5a2a1	E8	105	A5:1,1,1,1,1,1|A2:3|A1:2	D6(a1)
taba5a2a1	E8	106	A5:2,1,1,1,1|A2:1,1,1|A1:1,1	A6+A1
taba5a2a1	E8	107	A5:2,1,1,1,1|A2:1,1,1|A1:2	D5+A2
taba5a2a1	E8	108	A5:2,1,1,1,1|A2:2,1|A1:1,1	D7(a2)
taba5a2a1	E8	109	A5:2,1,1,1,1|A2:2,1|A1:2	E6(a1)+A1
taba5a2a1	E8	109	A5:2,1,1,1,1|A2:3|A1:1,1	E6(a1)+A1
taba5a2a1	E8	109	A5:2,2,1,1|A2:1,1,1|A1:1,1	A7
taba5a2a1	E8	110	A5:2,2,1,1|A2:1,1,1|A1:2	E8(b6)
taba5a2a1	E8	110	A5:3,1,1,1|A2:1,1,1|A1:1,1	E8(b6)
taba5a2a1	E8	110	A5:2,2,2|A2:1,1,1|A1:1,1	E8(b6)
taba5a2a1	E8	111	A5:2,2,1,1|A2:2,1|A1:1,1	D7(a1)
taba5a2a1	E8	111	A5:3,1,1,1|A2:1,1,1|A1:2	D7(a1)
taba5a2a1	E8	111	A5:2,2,2|A2:1,1,1|A1:2	E6+A1
taba5a2a1	E8	112	A5:2,2,1,1|A2:2,1|A1:2	E8(a6)
taba5a2a1	E8	112	A5:3,1,1,1|A2:2,1|A1:1,1	E8(a6)
taba5a2a1	E8	112	A5:2,2,2|A2:2,1|A1:1,1	E8(a6)
taba5a2a1	E8	112	A5:3,2,1|A2:1,1,1|A1:1,1	E8(a6)
taba5a2a1	E8	113	A5:2,2,1,1|A2:3|A1:2	E8(b5)
taba5a2a1	E8	113	A5:3,1,1,1|A2:2,1|A1:2	E8(b5)
taba5a2a1	E8	113	A5:3,1,1,1|A2:3|A1:1,1	E8(b5)
taba5a2a1	E8	113	A5:2,2,2|A2:2,1|A1:2	E8(b5)
taba5a2a1	E8	113	A5:2,2,2|A2:3|A1:1,1	E8(b5)
taba5a2a1	E8	113	A5:3,2,1|A2:1,1,1|A1:2	E8(b5)
taba5a2a1	E8	113	A5:4,1,1|A2:1,1,1|A1:1,1	E8(b5)
taba5a2a1	E8	113	A5:3,3|A2:1,1,1|A1:1,1	D7
taba5a2a1	E8	114	A5:3,1,1,1|A2:3|A1:2	E7(a1)
taba5a2a1	E8	114	A5:4,1,1|A2:1,1,1|A1:2	E8(a5)
taba5a2a1	E8	114	A5:2,2,2|A2:3|A1:2	E8(a5)
taba5a2a1	E8	114	A5:3,2,1|A2:2,1|A1:1,1	E8(a5)
taba5a2a1	E8	114	A5:3,3|A2:1,1,1|A1:2	E8(a5)
taba5a2a1	E8	114	A5:4,2|A2:1,1,1|A1:1,1	E8(a5)
taba5a2a1	E8	116	A5:3,2,1|A2:3|A1:2	E8(a4)
taba5a2a1	E8	116	A5:4,1,1|A2:2,1|A1:2	E8(a4)
taba5a2a1	E8	116	A5:4,1,1|A2:3|A1:1,1	E8(a4)
taba5a2a1	E8	116	A5:5,1|A2:1,1,1|A1:2	E8(a4)
taba5a2a1	E8	116	A5:3,3|A2:3|A1:1,1	E7
taba5a2a1	E8	116	A5:3,3|A2:2,1|A1:2	E8(a4)
taba5a2a1	E8	116	A5:4,2|A2:2,1|A1:1,1	E8(a4)
taba4a4	E8	100	A4:1,1,1,1,1|A4:1,1,1,1,1	A4+A3
taba4a4	E8	104	A4:2,1,1,1|A4:1,1,1,1,1	E8(a7)
taba4a4	E8	106	A4:1,1,1,1,1|A4:2,2,1	A6+A1
taba4a4	E8	107	A4:1,1,1,1,1|A4:3,1,1	D5+A2
taba4a4	E8	108	A4:1,1,1,1,1|A4:3,2	D7(a2)
taba4a4	E8	108	A4:2,1,1,1|A4:2,1,1,1	D7(a2)
taba4a4	E8	109	A4:1,1,1,1,1|A4:4,1	E6(a1)+A1
taba4a4	E8	110	A4:1,1,1,1,1|A4:5	E7(a3)
taba4a4	E8	110	A4:2,1,1,1|A4:2,2,1	E8(b6)
taba4a4	E8	111	A4:2,1,1,1|A4:3,1,1	D7(a1)
taba4a4	E8	112	A4:2,2,1|A4:2,2,1	E8(a6)
taba4a4	E8	112	A4:2,1,1,1|A4:3,2	E8(a6)
taba4a4	E8	113	A4:2,1,1,1|A4:4,1	E8(b5)
taba4a4	E8	113	A4:2,2,1|A4:3,1,1	E8(b5)
taba4a4	E8	114	A4:2,1,1,1|A4:5	E7(a1)
taba4a4	E8	114	A4:2,2,1|A4:3,2	E8(a5)
taba4a4	E8	114	A4:3,1,1|A4:3,1,1	E8(a5)
taba4a4	E8	116	A4:2,2,1|A4:5	E8(a4)
taba4a4	E8	116	A4:3,1,1|A4:4,1	E8(a4)
taba4a4	E8	116	A4:3,2|A4:3,2	E8(a4)
tabd8	E8	92	D8:2,2,2,2,2,2,2,2:I	D4(a1)+A2
tabd8	E8	92	D8:2,2,2,2,2,2,2,2:II	D4+A1
tabd8	E8	98	D8:4,4,1,1,1,1,1,1,1,1	D5(a1)+A1
tabd8	E8	99	D8:5,3,1,1,1,1,1,1,1,1	E6(a3)
tabd8	E8	99	D8:3,3,2,2,2,2,1,1	D4+A2
tabd8	E8	100	D8:7,1,1,1,1,1,1,1,1,1	D5
tabd8	E8	102	D8:3,3,3,3,1,1,1,1	D6(a2)
tabd8	E8	104	D8:3,3,3,3,3,1	E8(a7)
tabd8	E8	104	D8:5,3,2,2,1,1,1,1	E8(a7)
tabd8	E8	104	D8:4,4,3,1,1,1,1,1	E8(a7)
tabd8	E8	104	D8:4,4,2,2,2,2:I	E8(a7)
tabd8	E8	104	D8:4,4,2,2,2,2:II	D5+A1
tabd8	E8	105	D8:5,3,3,1,1,1,1,1	A6
tabd8	E8	105	D8:5,3,2,2,2,2	D6(a1)
tabd8	E8	106	D8:5,5,1,1,1,1,1,1	E7(a4)
tabd8	E8	107	D8:4,4,3,3,1,1	D5+A2
tabd8	E8	107	D8:7,3,1,1,1,1,1,1	E6(a1)
tabd8	E8	108	D8:4,4,4,4:I	D7(a2)
tabd8	E8	108	D8:4,4,4,4:II	D6
tabd8	E8	108	D8:5,3,3,3,1,1	D7(a2)
tabd8	E8	108	D8:9,1,1,1,1,1,1,1	E6
tabd8	E8	109	D8:5,5,2,2,1,1	E6(a1)+A1
tabd8	E8	110	D8:5,5,3,1,1,1	E8(b6)
tabd8	E8	110	D8:7,3,2,2,1,1	E7(a3)
tabd8	E8	111	D8:7,3,3,1,1,1	D7(a1)
tabd8	E8	111	D8:5,5,3,3	D7(a1)
tabd8	E8	111	D8:6,6,1,1,1,1	D7(a1)
tabd8	E8	112	D8:5,5,5,1	E8(a6)
tabd8	E8	112	D8:7,5,1,1,1,1	E8(a6)
tabd8	E8	112	D8:7,3,3,3	E8(a6)
tabd8	E8	112	D8:6,6,2,2:I	E8(a6)
tabd8	E8	112	D8:6,6,2,2:II	E7(a2)
tabd8	E8	113	D8:6,6,3,1	E8(b5)
tabd8	E8	113	D8:9,3,1,1,1,1	E8(b5)
tabd8	E8	113	D8:7,5,2,2	E8(b5)
tabd8	E8	114	D8:7,5,3,1	E8(a5)
tabd8	E8	114	D8:9,3,2,2	E7(a1)
tabd8	E8	114	D8:11,1,1,1,1,1	E7(a1)
tabd8	E8	116	D8:9,5,1,1	E8(a4)
tabd8	E8	116	D8:8,8:I	E8(a4)
tabd8	E8	116	D8:8,8:II	E7
tabd5a3	E8	94	D5:1,1,1,1,1,1,1,1,1,1|A3:1,1,1,1	2A3
tabd5a3	E8	98	D5:1,1,1,1,1,1,1,1,1,1|A3:2,2	A5
tabd5a3	E8	99	D5:1,1,1,1,1,1,1,1,1,1|A3:3,1	E6(a3)
tabd5a3	E8	100	D5:1,1,1,1,1,1,1,1,1,1|A3:4	D5
tabd5a3	E8	101	D5:2,2,1,1,1,1,1,1|A3:1,1,1,1	D5(a1)+A2
tabd5a3	E8	102	D5:3,1,1,1,1,1,1,1|A3:1,1,1,1	D6(a2)
tabd5a3	E8	104	D5:2,2,2,2,1,1|A3:1,1,1,1	E8(a7)
tabd5a3	E8	104	D5:2,2,1,1,1,1,1,1|A3:2,1,1	E8(a7)
tabd5a3	E8	105	D5:2,2,1,1,1,1,1,1|A3:2,2	A6
tabd5a3	E8	105	D5:3,1,1,1,1,1,1,1|A3:2,1,1	A6
tabd5a3	E8	106	D5:2,2,1,1,1,1,1,1|A3:3,1	E7(a4)
tabd5a3	E8	106	D5:3,1,1,1,1,1,1,1|A3:2,2	E7(a4)
tabd5a3	E8	107	D5:3,1,1,1,1,1,1,1|A3:3,1	E6(a1)
tabd5a3	E8	107	D5:2,2,1,1,1,1,1,1|A3:4	E6(a1)
tabd5a3	E8	107	D5:3,3,1,1,1,1|A3:1,1,1,1	D5+A2
tabd5a3	E8	107	D5:2,2,2,2,1,1|A3:2,1,1	D5+A2
tabd5a3	E8	108	D5:3,1,1,1,1,1,1,1|A3:4	E6
tabd5a3	E8	108	D5:2,2,2,2,1,1|A3:2,2	D7(a2)
tabd5a3	E8	108	D5:3,3,2,2|A3:1,1,1,1	D7(a2)
tabd5a3	E8	108	D5:5,1,1,1,1,1|A3:1,1,1,1	D6
tabd5a3	E8	109	D5:2,2,2,2,1,1|A3:3,1	E6(a1)+A1
tabd5a3	E8	109	D5:3,3,3,1|A3:1,1,1,1	A7
tabd5a3	E8	110	D5:2,2,2,2,1,1|A3:4	E7(a3)
tabd5a3	E8	110	D5:3,3,1,1,1,1|A3:2,1,1	E8(b6)
tabd5a3	E8	110	D5:4,4,1,1|A3:1,1,1,1	E8(b6)
tabd5a3	E8	111	D5:3,3,1,1,1,1|A3:2,2	D7(a1)
tabd5a3	E8	111	D5:3,3,2,2|A3:2,1,1	D7(a1)
tabd5a3	E8	111	D5:5,1,1,1,1,1|A3:2,1,1	D7(a1)
tabd5a3	E8	111	D5:5,3,1,1|A3:1,1,1,1	D7(a1)
tabd5a3	E8	112	D5:3,3,1,1,1,1|A3:3,1	E8(a6)
tabd5a3	E8	112	D5:3,3,3,1|A3:2,1,1	E8(a6)
tabd5a3	E8	112	D5:3,3,2,2|A3:2,2	E8(a6)
tabd5a3	E8	112	D5:5,1,1,1,1,1|A3:2,2	E7(a2)
tabd5a3	E8	112	D5:7,1,1,1|A3:1,1,1,1	E7(a2)
tabd5a3	E8	112	D5:5,5|A3:1,1,1,1	E8(a6)
tabd5a3	E8	113	D5:3,3,1,1,1,1|A3:4	E8(b5)
tabd5a3	E8	113	D5:3,3,2,2|A3:3,1	E8(b5)
tabd5a3	E8	113	D5:5,1,1,1,1,1|A3:3,1	E8(b5)
tabd5a3	E8	113	D5:4,4,1,1|A3:2,1,1	E8(b5)
tabd5a3	E8	113	D5:7,3|A3:1,1,1,1	E8(b5)
tabd5a3	E8	113	D5:3,3,3,1|A3:2,2	D7
tabd5a3	E8	114	D5:3,3,2,2|A3:4	E7(a1)
tabd5a3	E8	114	D5:5,1,1,1,1,1|A3:4	E7(a1)
tabd5a3	E8	114	D5:3,3,3,1|A3:3,1	E8(a5)
tabd5a3	E8	114	D5:4,4,1,1|A3:2,2	E8(a5)
tabd5a3	E8	114	D5:5,3,1,1|A3:2,1,1	E8(a5)
tabd5a3	E8	114	D5:9,1|A3:1,1,1,1	E7(a1)
tabd5a3	E8	116	D5:4,4,1,1|A3:4	E8(a4)
tabd5a3	E8	116	D5:5,3,1,1|A3:3,1	E8(a4)
tabd5a3	E8	116	D5:7,1,1,1|A3:2,2	E7
tabd5a3	E8	116	D5:5,5|A3:2,2	E8(a4)
tabd5a3	E8	116	D5:7,3|A3:2,1,1	E8(a4)
tabe6a2	E8	84	@E6:0|A2:3	D4
tabe6a2	E8	92	@E6:A1|A2:1,1,1	D4(a1)+A2
tabe6a2	E8	94	@E6:A1|A2:2,1	A4+A1
tabe6a2	E8	99	@E6:2A1|A2:2,1	E6(a3)
tabe6a2	E8	100	@E6:2A1|A2:3	D5
tabe6a2	E8	102	@E6:A2|A2:1,1,1	E6(a3)+A1
tabe6a2	E8	104	@E6:A2|A2:2,1	E8(a7)
tabe6a2	E8	104	@E6:A2+A1|A2:1,1,1	E8(a7)
tabe6a2	E8	105	@E6:A2|A2:3	D6(a1)
tabe6a2	E8	105	@E6:2A2|A2:1,1,1	A6
tabe6a2	E8	106	@E6:A2+A1|A2:2,1	E7(a4)
tabe6a2	E8	106	@E6:A2+2A1|A2:1,1,1	A6+A1
tabe6a2	E8	107	@E6:A2+A1|A2:3	E6(a1)
tabe6a2	E8	107	@E6:2A2|A2:2,1	E6(a1)
tabe6a2	E8	107	@E6:A3|A2:1,1,1	D5+A2
tabe6a2	E8	108	@E6:2A2|A2:3	E6
tabe6a2	E8	108	@E6:A2+2A1|A2:2,1	D7(a2)
tabe6a2	E8	109	@E6:A2+2A1|A2:3	E6(a1)+A1
tabe6a2	E8	109	@E6:A3|A2:2,1	E6(a1)+A1
tabe6a2	E8	110	@E6:A3|A2:3	E7(a3)
tabe6a2	E8	110	@E6:D4(a1)|A2:1,1,1	E8(b6)
tabe6a2	E8	111	@E6:A4|A2:1,1,1	D7(a1)
tabe6a2	E8	111	@E6:D4|A2:1,1,1	E6+A1
tabe6a2	E8	112	@E6:D4(a1)|A2:2,1	E8(a6)
tabe6a2	E8	112	@E6:A4+A1|A2:1,1,1	E8(a6)
tabe6a2	E8	113	@E6:D4(a1)|A2:3	E8(b5)
tabe6a2	E8	113	@E6:A4|A2:2,1	E8(b5)
tabe6a2	E8	113	@E6:D4|A2:2,1	E8(b5)
tabe6a2	E8	113	@E6:D5(a1)|A2:1,1,1	E8(b5)
tabe6a2	E8	114	@E6:A4|A2:3	E7(a1)
tabe6a2	E8	114	@E6:D4|A2:3	E8(a5)
tabe6a2	E8	114	@E6:A4+A1|A2:2,1	E8(a5)
tabe6a2	E8	114	@E6:E6(a3)|A2:1,1,1	E8(a5)
tabe6a2	E8	116	@E6:D5(a1)|A2:3	E8(a4)
tabe6a2	E8	116	@E6:E6(a3)|A2:2,1	E8(a4)
tabe6a2	E8	116	@E6:E6(a1)|A2:1,1,1	E8(a4)
tabe7a1	E8	84	@E7:(3A1)''|A1:2	D4
tabe7a1	E8	94	@E7:A2+A1|A1:1,1	A4+A1
tabe7a1	E8	98	@E7:A2+2A1|A1:2	D5(a1)+A1
tabe7a1	E8	98	@E7:A3|A1:1,1	D5(a1)+A1
tabe7a1	E8	98	@E7:2A2|A1:1,1	A5
tabe7a1	E8	98	@E7:A2+3A1|A1:1,1	A4+A2+A1
tabe7a1	E8	99	@E7:(A3+A1)''|A1:1,1	E6(a3)
tabe7a1	E8	99	@E7:A3|A1:2	E6(a3)
tabe7a1	E8	99	@E7:2A2|A1:2	E6(a3)
tabe7a1	E8	99	@E7:A2+3A1|A1:2	D4+A2
tabe7a1	E8	100	@E7:(A3+A1)''|A1:2	D5
tabe7a1	E8	104	@E7:D4|A1:1,1	D5+A1
tabe7a1	E8	104	@E7:D4(a1)+A1|A1:1,1	E8(a7)
tabe7a1	E8	104	@E7:D4(a1)|A1:2	E8(a7)
tabe7a1	E8	105	@E7:D4(a1)+A1|A1:2	D6(a1)
tabe7a1	E8	105	@E7:D4|A1:2	D6(a1)
tabe7a1	E8	106	@E7:A4|A1:1,1	E7(a4)
tabe7a1	E8	106	@E7:A3+A2+A1|A1:1,1	A6+A1
tabe7a1	E8	107	@E7:A4|A1:2	E6(a1)
tabe7a1	E8	107	@E7:(A5)''|A1:1,1	E6(a1)
tabe7a1	E8	107	@E7:A3+A2+A1|A1:2	D5+A2
tabe7a1	E8	108	@E7:(A5)''|A1:2	E6
tabe7a1	E8	108	@E7:A4+A1|A1:1,1	D7(a2)
tabe7a1	E8	109	@E7:A4+A1|A1:2	E6(a1)+A1
tabe7a1	E8	109	@E7:D5(a1)|A1:1,1	E6(a1)+A1
tabe7a1	E8	109	@E7:A4+A2|A1:1,1	A7
tabe7a1	E8	110	@E7:D5(a1)|A1:2	E7(a3)
tabe7a1	E8	110	@E7:A4+A2|A1:2	E8(b6)
tabe7a1	E8	110	@E7:D5(a1)+A1|A1:1,1	E8(b6)
tabe7a1	E8	111	@E7:D5(a1)+A1|A1:2	D7(a1)
tabe7a1	E8	111	@E7:E6(a3)|A1:1,1	D7(a1)
tabe7a1	E8	112	@E7:E6(a3)|A1:2	E8(a6)
tabe7a1	E8	112	@E7:E7(a5)|A1:1,1	E8(a6)
tabe7a1	E8	112	@E7:D5|A1:1,1	E7(a2)
tabe7a1	E8	113	@E7:E7(a5)|A1:2	E8(b5)
tabe7a1	E8	113	@E7:D5|A1:2	E8(b5)
tabe7a1	E8	113	@E7:D6(a1)|A1:1,1	E8(b5)
tabe7a1	E8	113	@E7:D5+A1|A1:1,1	E8(b5)
tabe7a1	E8	113	@E7:A6|A1:1,1	D7
tabe7a1	E8	114	@E7:D6(a1)|A1:2	E7(a1)
tabe7a1	E8	114	@E7:D5+A1|A1:2	E8(a5)
tabe7a1	E8	114	@E7:A6|A1:2	E8(a5)
tabe7a1	E8	114	@E7:E7(a4)|A1:1,1	E8(a5)
tabe7a1	E8	116	@E7:E6(a1)|A1:2	E8(a4)
tabe7a1	E8	116	@E7:E7(a3)|A1:1,1	E8(a4)
tabe7a1	E8	116	@E7:E6|A1:1,1	E7
)";

} // namespace orbitatlas::data
