#pragma once

// Bundled derivation traces for the nine-relator presentation.
// Generated data: each entry is the exact text of the matching
// file under data/traces/.

namespace grouplaw {

struct BundledTrace {
  const char* name;
  const char* text;
};

inline constexpr BundledTrace kGammaTraces[] = {
    {"sym_r0",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: b^-1y^-1by
step: pos=0 rel=1 sign=-1 conj=1 result=1
end: 1
)TRACE"},
    {"sym_r1",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: a^-1x^-1ax
step: pos=0 rel=0 sign=-1 conj=1 result=1
end: 1
)TRACE"},
    {"sym_r2",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: a^-1b^-1a^-1z^-1abza
step: pos=0 rel=2 sign=-1 conj=a result=1
end: 1
)TRACE"},
    {"sym_r3",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: y^-1x^-1yx
step: pos=0 rel=3 sign=+1 conj=1 result=1
end: 1
)TRACE"},
    {"sym_r4",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: y^-1a^-1z^-1aya^-1za
step: pos=8 rel=1 sign=+1 conj=b^-1a^-1za result=y^-1a^-1z^-1abyb^-1a^-1za
step: pos=10 rel=1 sign=-1 conj=z^-1b^-1a^-1za result=y^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1za
step: pos=16 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1za result=y^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1za
step: pos=8 rel=2 sign=+1 conj=b^-1 result=y^-1a^-1z^-1abzb^-1y
step: pos=0 rel=2 sign=-1 conj=b^-1y result=1
end: 1
)TRACE"},
    {"sym_r5",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: x^-1a^-1z^-1axa^-1za
step: pos=8 rel=0 sign=+1 conj=a^-1x^-1ax result=x^-1a^-1z^-1axa^-1zx^-1ax
step: pos=10 rel=0 sign=-1 conj=a^-1zx^-1ax result=x^-1a^-1z^-1xzx^-1ax
step: pos=0 rel=4 sign=-1 conj=x^-1ax result=1
end: 1
)TRACE"},
    {"sym_r6",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: y^-1b^-1x^-1a^-1byax
step: pos=0 rel=6 sign=+1 conj=1 result=1
end: 1
)TRACE"},
    {"sym_r7",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: y^-1b^-1a^-1z^-1ybza
step: pos=8 rel=1 sign=-1 conj=y^-1b^-1y result=y^-1b^-1a^-1z^-1ybzaby^-1b^-1y
step: pos=12 rel=1 sign=+1 conj=zaby^-1b^-1y result=y^-1b^-1a^-1z^-1byzaby^-1b^-1y
step: pos=12 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1y result=y^-1b^-1a^-1z^-1abzbyz^-1b^-1a^-1zaby^-1b^-1y
step: pos=18 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1y result=y^-1byz^-1b^-1a^-1zaby^-1b^-1y
step: pos=0 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1y result=1
end: 1
)TRACE"},
    {"sym_r8",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: x^-1a^-2z^-1b^-1axbza
step: pos=10 rel=0 sign=-1 conj=bza result=x^-1a^-2z^-1b^-1xabza
step: pos=10 rel=0 sign=+1 conj=1 result=x^-1a^-2z^-1b^-1xabzx^-1ax
step: pos=0 rel=7 sign=-1 conj=x^-1ax result=1
end: 1
)TRACE"},
    {"ab_yx",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: axybabz
step: pos=0 rel=1 sign=+1 conj=b^-1y^-1x^-1a^-1 result=axbyabz
step: pos=0 rel=8 sign=-1 conj=z^-1b^-1a^-1y^-1b^-1x^-1a^-1 result=axabzby
step: pos=0 rel=7 sign=-1 conj=z^-1b^-1a^-1x^-1a^-1 result=abzaxby
step: pos=0 rel=0 sign=-1 conj=x^-1a^-1z^-1b^-1a^-1 result=abzxaby
step: pos=0 rel=4 sign=+1 conj=x^-1z^-1b^-1a^-1 result=abxzaby
step: pos=0 rel=2 sign=+1 conj=b^-1a^-1z^-1x^-1b^-1a^-1 result=abxabzy
step: pos=0 rel=0 sign=+1 conj=a^-1x^-1b^-1a^-1 result=abaxbzy
step: pos=0 rel=5 sign=+1 conj=y^-1z^-1b^-1x^-1a^-1b^-1a^-1 result=abaxbyz
step: pos=0 rel=1 sign=-1 conj=y^-1b^-1x^-1a^-1b^-1a^-1 result=abaxybz
end: abaxybz
)TRACE"},
    {"a_bzy",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: abzy
step: pos=0 rel=1 sign=+1 conj=b^-1y^-1z^-1b^-1a^-1 result=abzbyb^-1
step: pos=0 rel=8 sign=+1 conj=y^-1b^-1z^-1b^-1a^-1 result=byabzb^-1
step: pos=0 rel=2 sign=-1 conj=z^-1b^-1a^-1y^-1b^-1 result=byza
step: pos=0 rel=5 sign=-1 conj=z^-1y^-1b^-1 result=bzya
end: bzya
)TRACE"},
    {"b_zax",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: bzax
step: pos=4 rel=0 sign=+1 conj=a^-1 result=bza^2xa^-1
step: pos=6 rel=7 sign=+1 conj=x^-1axa^-1 result=xabzx^-1axa^-1
step: pos=4 rel=0 sign=-1 conj=a^-1 result=xabz
step: pos=4 rel=0 sign=+1 conj=bz result=axbz
step: pos=4 rel=2 sign=-1 conj=1 result=axa^-1zab
step: pos=6 rel=0 sign=+1 conj=a^-1x^-1axb result=axa^-1zx^-1axb
step: pos=8 rel=0 sign=-1 conj=a^-1zx^-1axb result=xzx^-1axb
step: pos=6 rel=4 sign=-1 conj=x^-1axb result=zaxb
end: zaxb
)TRACE"},
    {"b_zm1x",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: abxb^-1
step: pos=4 rel=0 sign=+1 conj=a^-1x^-1y^-1xb^-1 result=abyaxa^-1x^-1y^-1xb^-1
step: pos=10 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xb^-1 result=abyaxa^-1zx^-1axa^-1z^-1x^-1y^-1xb^-1
step: pos=16 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xb^-1 result=abyxzx^-1axa^-1z^-1x^-1y^-1xb^-1
step: pos=14 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xb^-1 result=abyzaxa^-1z^-1x^-1y^-1xb^-1
step: pos=12 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1xb^-1 result=aybzaxa^-1z^-1x^-1y^-1xb^-1
step: pos=12 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xb^-1 result=aya^-1zabaxa^-1z^-1x^-1y^-1xb^-1
step: pos=14 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1 result=abyb^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1
step: pos=16 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1 result=abyzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1
step: pos=22 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1 result=abzb^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xb^-1
step: pos=20 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xb^-1 result=abzb^-1ybaxa^-1z^-1x^-1y^-1xb^-1
step: pos=14 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xb^-1 result=zaybaxa^-1z^-1x^-1y^-1xb^-1
step: pos=12 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1xb^-1 result=zabyaxa^-1z^-1x^-1y^-1xb^-1
step: pos=12 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1 result=zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1
step: pos=22 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1 result=abzbyz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1
step: pos=22 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1 result=byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1
step: pos=16 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1 result=ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1
step: pos=16 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xb^-1 result=ybza^2xa^-1z^-1x^-1y^-1xb^-1
step: pos=12 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xb^-1 result=yxabzx^-1axa^-1z^-1x^-1y^-1xb^-1
step: pos=14 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1xb^-1 result=yxabx^-1y^-1xb^-1
step: pos=8 rel=0 sign=+1 conj=bx^-1y^-1xb^-1 result=yaxbx^-1y^-1xb^-1
step: pos=8 rel=0 sign=-1 conj=bx^-1y^-1xb^-1 result=yxabx^-1y^-1xb^-1
step: pos=8 rel=3 sign=-1 conj=y^-1b^-1 result=yxaby^-1b^-1
step: pos=6 rel=3 sign=+1 conj=aby^-1b^-1 result=xyaby^-1b^-1
step: pos=0 rel=3 sign=-1 conj=y^-1x^-1 result=yxaby^-1b^-1
step: pos=0 rel=1 sign=+1 conj=b^-1a^-1x^-1y^-1 result=yxay^-1
step: pos=0 rel=0 sign=+1 conj=a^-1x^-1y^-1 result=yaxy^-1
step: pos=0 rel=6 sign=+1 conj=x^-1a^-1y^-1 result=b^-1axb
step: pos=4 rel=0 sign=-1 conj=b result=b^-1xab
step: pos=4 rel=7 sign=-1 conj=z^-1 result=zaxz^-1
step: pos=0 rel=2 sign=+1 conj=b^-1a^-1z^-1 result=abzb^-1xz^-1
step: pos=0 rel=4 sign=+1 conj=x^-1bz^-1b^-1a^-1 result=abzb^-1z^-1x
end: abzb^-1z^-1x
)TRACE"},
    {"b_commaz",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: ba^-1z^-1az
step: pos=5 rel=4 sign=+1 conj=x^-1axba^-1z^-1az result=x^-1a^-1z^-1xzx^-1axba^-1z^-1az
step: pos=13 rel=0 sign=+1 conj=a^-1zx^-1axba^-1z^-1az result=x^-1a^-1z^-1axa^-1zx^-1axba^-1z^-1az
step: pos=15 rel=0 sign=-1 conj=a^-1x^-1axba^-1z^-1az result=x^-1a^-1z^-1axa^-1zaba^-1z^-1az
step: pos=13 rel=2 sign=+1 conj=a^-1z^-1az result=x^-1a^-1z^-1axbza^-1z^-1az
step: pos=11 rel=0 sign=-1 conj=bza^-1z^-1az result=x^-1a^-1z^-1xabza^-1z^-1az
step: pos=11 rel=0 sign=+1 conj=a^-1x^-1axa^-2z^-1az result=x^-1a^-1z^-1xabzx^-1axa^-2z^-1az
step: pos=15 rel=7 sign=-1 conj=x^-1axa^-2z^-1az result=x^-1a^-1z^-1bza^2xa^-2z^-1az
step: pos=13 rel=0 sign=-1 conj=a^-2z^-1az result=x^-1a^-1z^-1bzaxa^-1z^-1az
step: pos=11 rel=4 sign=-1 conj=z^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zxz^-1bzaxa^-1z^-1az
step: pos=15 rel=2 sign=-1 conj=b^-1xz^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaxz^-1bzaxa^-1z^-1az
step: pos=21 rel=7 sign=+1 conj=z^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1xab^2zaxa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=b^2zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1axb^2zaxa^-1z^-1az
step: pos=21 rel=6 sign=-1 conj=y^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxy^-1bzaxa^-1z^-1az
step: pos=21 rel=0 sign=-1 conj=y^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxay^-1bzaxa^-1z^-1az
step: pos=21 rel=1 sign=-1 conj=y^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaxa^-1z^-1az
step: pos=21 rel=3 sign=+1 conj=aby^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1xyaby^-1zaxa^-1z^-1az
step: pos=21 rel=3 sign=-1 conj=aby^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaxa^-1z^-1az
step: pos=21 rel=3 sign=+1 conj=y^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=0 sign=+1 conj=bx^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxbx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=0 sign=-1 conj=bx^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=0 sign=+1 conj=a^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=29 rel=7 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=-1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=1 sign=+1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=37 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=2 sign=+1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=21 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=33 rel=1 sign=+1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=-1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=25 rel=1 sign=+1 conj=zaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yzaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=4 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yxzx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=25 rel=0 sign=+1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=0 sign=-1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yaxa^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=21 rel=0 sign=-1 conj=a^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1xzaxa^-1z^-1az
step: pos=15 rel=0 sign=+1 conj=a^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yaxa^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yxzx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=25 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yzaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=25 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=33 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=21 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=37 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=31 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=27 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1xzaxa^-1z^-1az
step: pos=29 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=0 sign=+1 conj=bx^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxbx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=0 sign=-1 conj=bx^-1y^-1xzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaxa^-1z^-1az
step: pos=23 rel=3 sign=-1 conj=y^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaxa^-1z^-1az
step: pos=21 rel=3 sign=+1 conj=aby^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1xyaby^-1zaxa^-1z^-1az
step: pos=21 rel=3 sign=-1 conj=aby^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaxa^-1z^-1az
step: pos=21 rel=1 sign=+1 conj=y^-1zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxay^-1bzaxa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=y^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxy^-1bzaxa^-1z^-1az
step: pos=21 rel=6 sign=+1 conj=y^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1axb^2zaxa^-1z^-1az
step: pos=21 rel=0 sign=-1 conj=b^2zaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1xab^2zaxa^-1z^-1az
step: pos=21 rel=7 sign=-1 conj=z^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaxz^-1bzaxa^-1z^-1az
step: pos=21 rel=2 sign=+1 conj=b^-1xz^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1x^-1zxz^-1bzaxa^-1z^-1az
step: pos=15 rel=4 sign=+1 conj=z^-1bzaxa^-1z^-1az result=x^-1a^-1z^-1bzaxa^-1z^-1az
step: pos=11 rel=0 sign=+1 conj=a^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yaxa^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=19 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yxzx^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=23 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yzaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=21 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1ybzaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=23 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=31 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1ybaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=19 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=35 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1b^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=29 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=29 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=29 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=25 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1z^2axa^-1z^-1az
step: pos=27 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxabx^-1y^-1z^2axa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=bx^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yaxbx^-1y^-1z^2axa^-1z^-1az
step: pos=21 rel=0 sign=-1 conj=bx^-1y^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxabx^-1y^-1z^2axa^-1z^-1az
step: pos=21 rel=3 sign=-1 conj=y^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxaby^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=3 sign=+1 conj=aby^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1xyaby^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=3 sign=-1 conj=aby^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxaby^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=1 sign=+1 conj=y^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yxay^-1bx^-1z^2axa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=y^-1bx^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1yaxy^-1bx^-1z^2axa^-1z^-1az
step: pos=21 rel=6 sign=+1 conj=y^-1bx^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1b^-1axb^2x^-1z^2axa^-1z^-1az
step: pos=21 rel=0 sign=-1 conj=b^2x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1b^-1xab^2x^-1z^2axa^-1z^-1az
step: pos=21 rel=7 sign=-1 conj=z^-1bx^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1bz^-1b^-1a^-1zaxz^-1bx^-1z^2axa^-1z^-1az
step: pos=21 rel=2 sign=+1 conj=b^-1xz^-1bx^-1z^2axa^-1z^-1az result=x^-1a^-1z^-1xz^-1bx^-1z^2axa^-1z^-1az
step: pos=15 rel=4 sign=+1 conj=z^-1bx^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xbx^-1z^2axa^-1z^-1az
step: pos=15 rel=0 sign=+1 conj=a^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xbza^2xa^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=23 rel=7 sign=+1 conj=x^-1axa^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2x^2abzx^-1axa^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=25 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2x^2abzx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=0 sign=+1 conj=bzx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xaxbzx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=2 sign=-1 conj=x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xaxa^-1zabx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=23 rel=0 sign=+1 conj=a^-1x^-1axbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xaxa^-1zx^-1axbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=25 rel=0 sign=-1 conj=a^-1zx^-1axbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2x^2zx^-1axbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=23 rel=4 sign=-1 conj=x^-1axbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzaxbx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=4 sign=-1 conj=z^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazxz^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=23 rel=2 sign=-1 conj=b^-1xz^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1zaxz^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=7 sign=+1 conj=z^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1b^-1xab^2x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=0 sign=+1 conj=b^2x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1b^-1axb^2x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=6 sign=-1 conj=y^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yaxy^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=0 sign=-1 conj=y^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxay^-1bx^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=1 sign=-1 conj=y^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxaby^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=3 sign=+1 conj=aby^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1xyaby^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=3 sign=-1 conj=aby^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxaby^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=3 sign=+1 conj=y^-1x^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxabx^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=0 sign=+1 conj=bx^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yaxbx^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=0 sign=-1 conj=bx^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxabx^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=0 sign=+1 conj=a^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=35 rel=7 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=1 sign=-1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=37 rel=1 sign=+1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=37 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=37 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=43 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=1 sign=-1 conj=axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=2 sign=+1 conj=b^-1ybaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazybaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=27 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=39 rel=1 sign=+1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=1 sign=-1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=31 rel=1 sign=+1 conj=zaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yzaxa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=29 rel=4 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yxzx^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=31 rel=0 sign=+1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=33 rel=0 sign=-1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1yaxa^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=27 rel=0 sign=-1 conj=a^-1x^-1y^-1a^-1z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1a^-1z^-1x^-1z^2axa^-1z^-1az
step: pos=21 rel=4 sign=+1 conj=z^-1x^-1z^2axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1a^-1x^-1zaxa^-1z^-1az
step: pos=19 rel=4 sign=+1 conj=x^-1axa^-1z^-1az result=x^-1a^-1z^-2xzazbz^-1a^-1zx^-1axa^-1z^-1az
step: pos=9 rel=0 sign=-1 conj=a^-1z^-1az result=x^-1a^-1z^-2xzazb
step: pos=9 rel=0 sign=+1 conj=a^-1z^-1azb result=x^-1a^-1z^-2xz^2x^-1axa^-1z^-1azb
step: pos=15 rel=4 sign=-1 conj=x^-1axa^-1z^-1azb result=x^-1a^-1z^-2xzx^-1zaxa^-1z^-1azb
step: pos=15 rel=4 sign=-1 conj=z^-1x^-1z^2axa^-1z^-1azb result=a^-1z^-1azb
end: a^-1z^-1azb
)TRACE"},
    {"nilp_b",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: b^-2a^-1baba^-1b^-1ab
step: pos=10 rel=0 sign=+1 conj=a^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyaxa^-1x^-1y^-1a^-1b^-1ab
step: pos=16 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyaxa^-1zx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyxzx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyzaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1baybzaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1baya^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyb^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=26 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ybaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzaybaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzabyaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzbyz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1b^2yzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bybza^2xa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabzx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabx^-1y^-1a^-1b^-1ab
step: pos=14 rel=0 sign=+1 conj=bx^-1y^-1a^-1b^-1ab result=b^-2a^-1byaxbx^-1y^-1a^-1b^-1ab
step: pos=14 rel=0 sign=-1 conj=bx^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabx^-1y^-1a^-1b^-1ab
step: pos=14 rel=1 sign=+1 conj=x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxay^-1byx^-1y^-1a^-1b^-1ab
step: pos=16 rel=3 sign=-1 conj=x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxay^-1bx^-1a^-1b^-1ab
step: pos=14 rel=0 sign=+1 conj=y^-1bx^-1a^-1b^-1ab result=b^-2a^-1byaxy^-1bx^-1a^-1b^-1ab
step: pos=14 rel=3 sign=+1 conj=y^-1bx^-1a^-1b^-1ab result=b^-2a^-1byay^-1xbx^-1a^-1b^-1ab
step: pos=14 rel=5 sign=+1 conj=ay^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1yzay^-1xbx^-1a^-1b^-1ab
step: pos=16 rel=2 sign=+1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1yabzb^-1y^-1xbx^-1a^-1b^-1ab
step: pos=18 rel=8 sign=-1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abzbyb^-1y^-1xbx^-1a^-1b^-1ab
step: pos=20 rel=1 sign=-1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abzxbx^-1a^-1b^-1ab
step: pos=16 rel=4 sign=+1 conj=x^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xzx^-1axbx^-1a^-1b^-1ab
step: pos=22 rel=0 sign=+1 conj=a^-1zx^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axa^-1zx^-1axbx^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=a^-1x^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axa^-1zabx^-1a^-1b^-1ab
step: pos=22 rel=2 sign=+1 conj=x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axbzx^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=bzx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xabzx^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=a^-1x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xabzx^-1axa^-1x^-1a^-1b^-1ab
step: pos=24 rel=7 sign=-1 conj=x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1bza^2xa^-1x^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1bzb^-1ab
step: pos=16 rel=0 sign=+1 conj=a^-1x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1bza^2xa^-1x^-1a^-1b^-1ab
step: pos=22 rel=7 sign=+1 conj=x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xabzx^-1axa^-1x^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1axa^-1x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xabzx^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=bzx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axbzx^-1a^-1b^-1ab
step: pos=20 rel=2 sign=-1 conj=x^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axa^-1zabx^-1a^-1b^-1ab
step: pos=22 rel=0 sign=+1 conj=a^-1x^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1axa^-1zx^-1axbx^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=a^-1zx^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abza^-1z^-1xzx^-1axbx^-1a^-1b^-1ab
step: pos=22 rel=4 sign=-1 conj=x^-1axbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abzxbx^-1a^-1b^-1ab
step: pos=16 rel=1 sign=+1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1b^-1abzbyb^-1y^-1xbx^-1a^-1b^-1ab
step: pos=20 rel=8 sign=+1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1yabzb^-1y^-1xbx^-1a^-1b^-1ab
step: pos=18 rel=2 sign=-1 conj=b^-1y^-1xbx^-1a^-1b^-1ab result=b^-2a^-1bz^-1yzay^-1xbx^-1a^-1b^-1ab
step: pos=16 rel=5 sign=-1 conj=ay^-1xbx^-1a^-1b^-1ab result=b^-2a^-1byay^-1xbx^-1a^-1b^-1ab
step: pos=14 rel=3 sign=-1 conj=y^-1bx^-1a^-1b^-1ab result=b^-2a^-1byaxy^-1bx^-1a^-1b^-1ab
step: pos=14 rel=0 sign=-1 conj=y^-1bx^-1a^-1b^-1ab result=b^-2a^-1byxay^-1bx^-1a^-1b^-1ab
step: pos=14 rel=3 sign=+1 conj=x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxay^-1byx^-1y^-1a^-1b^-1ab
step: pos=16 rel=1 sign=-1 conj=x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabx^-1y^-1a^-1b^-1ab
step: pos=14 rel=0 sign=+1 conj=bx^-1y^-1a^-1b^-1ab result=b^-2a^-1byaxbx^-1y^-1a^-1b^-1ab
step: pos=14 rel=0 sign=-1 conj=bx^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabx^-1y^-1a^-1b^-1ab
step: pos=14 rel=0 sign=+1 conj=a^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1byxabzx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=7 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bybza^2xa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=1 sign=-1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=1 sign=+1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1b^2yzaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzbyz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzabyaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=1 sign=-1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1bzaybaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=2 sign=+1 conj=b^-1ybaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ybaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=26 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=28 rel=1 sign=+1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyb^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=1 sign=-1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1baya^-1zabaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1baybzaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=1 sign=+1 conj=zaxa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyzaxa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=18 rel=4 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyxzx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyaxa^-1zx^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1babyaxa^-1x^-1y^-1a^-1b^-1ab
step: pos=16 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1y^-1a^-1b^-1ab result=b^-2a^-1baba^-1b^-1ab
step: pos=10 rel=0 sign=+1 conj=a^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyaxa^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyaxa^-1zx^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyxzx^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=22 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyzaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=20 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ybzaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=22 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1ya^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyb^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzyzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=30 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babz^2b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babz^2b^-1ybaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=22 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1zaybaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1zabyaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=34 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babz^2byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=30 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=28 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1ybza^2xa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=24 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yxabx^-1y^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=bx^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yaxbx^-1y^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=bx^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yxabx^-1y^-1z^-1a^-1b^-1ab
step: pos=20 rel=1 sign=+1 conj=x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yxay^-1byx^-1y^-1z^-1a^-1b^-1ab
step: pos=22 rel=3 sign=-1 conj=x^-1y^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yxay^-1bx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=y^-1bx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yaxy^-1bx^-1z^-1a^-1b^-1ab
step: pos=20 rel=3 sign=+1 conj=y^-1bx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1yay^-1xbx^-1z^-1a^-1b^-1ab
step: pos=20 rel=5 sign=+1 conj=ay^-1xbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1yzay^-1xbx^-1z^-1a^-1b^-1ab
step: pos=22 rel=2 sign=+1 conj=b^-1y^-1xbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1yabzb^-1y^-1xbx^-1z^-1a^-1b^-1ab
step: pos=24 rel=8 sign=-1 conj=b^-1y^-1xbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abzbyb^-1y^-1xbx^-1z^-1a^-1b^-1ab
step: pos=26 rel=1 sign=-1 conj=b^-1y^-1xbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abzxbx^-1z^-1a^-1b^-1ab
step: pos=22 rel=4 sign=+1 conj=x^-1axbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1xzx^-1axbx^-1z^-1a^-1b^-1ab
step: pos=28 rel=0 sign=+1 conj=a^-1zx^-1axbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1axa^-1zx^-1axbx^-1z^-1a^-1b^-1ab
step: pos=30 rel=0 sign=-1 conj=a^-1x^-1axbx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1axa^-1zabx^-1z^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=x^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1axbzx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=-1 conj=bzx^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1xabzx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=+1 conj=a^-1x^-1axa^-1x^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1xabzx^-1axa^-1x^-1z^-1a^-1b^-1ab
step: pos=30 rel=7 sign=-1 conj=x^-1axa^-1x^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1bza^2xa^-1x^-1z^-1a^-1b^-1ab
step: pos=28 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1z^-1a^-1b^-1ab result=b^-2a^-1babzb^-1a^-1z^-1b^-1abza^-1z^-1bzaz^-1a^-1b^-1ab
step: pos=24 rel=2 sign=-1 conj=b^-1a^-1z^-1b^-1abza^-1z^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1bzaz^-1a^-1b^-1ab
step: pos=12 rel=4 sign=-1 conj=z^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zxz^-1bzaz^-1a^-1b^-1ab
step: pos=16 rel=2 sign=-1 conj=b^-1xz^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zaxz^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=7 sign=+1 conj=z^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1b^-1xab^2zaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=+1 conj=b^2zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1b^-1axb^2zaz^-1a^-1b^-1ab
step: pos=22 rel=6 sign=-1 conj=y^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yaxy^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=y^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxay^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=1 sign=-1 conj=y^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=3 sign=+1 conj=aby^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1xyaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=3 sign=-1 conj=aby^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=3 sign=+1 conj=y^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=0 sign=+1 conj=bx^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yaxbx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=bx^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=0 sign=+1 conj=a^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=30 rel=7 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=1 sign=+1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=38 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=22 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=34 rel=1 sign=+1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=26 rel=1 sign=+1 conj=zaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yzaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=4 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yxzx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=26 rel=0 sign=+1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=0 sign=-1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yaxa^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=a^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1xzaz^-1a^-1b^-1ab
step: pos=16 rel=0 sign=+1 conj=a^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yaxa^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yxzx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=26 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yzaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=26 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=34 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=22 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=38 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=32 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=28 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=30 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=0 sign=+1 conj=bx^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yaxbx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=bx^-1y^-1xzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzaz^-1a^-1b^-1ab
step: pos=24 rel=3 sign=-1 conj=y^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=3 sign=+1 conj=aby^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1xyaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=3 sign=-1 conj=aby^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zaz^-1a^-1b^-1ab
step: pos=22 rel=1 sign=+1 conj=y^-1zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yxay^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=+1 conj=y^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1yaxy^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=6 sign=+1 conj=y^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1b^-1axb^2zaz^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=b^2zaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1b^-1xab^2zaz^-1a^-1b^-1ab
step: pos=22 rel=7 sign=-1 conj=z^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zbz^-1b^-1a^-1zaxz^-1bzaz^-1a^-1b^-1ab
step: pos=22 rel=2 sign=+1 conj=b^-1xz^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1x^-1zxz^-1bzaz^-1a^-1b^-1ab
step: pos=16 rel=4 sign=+1 conj=z^-1bzaz^-1a^-1b^-1ab result=b^-1za^-1z^-1bzaz^-1a^-1b^-1ab
step: pos=12 rel=0 sign=+1 conj=a^-1x^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1bza^2xa^-1x^-1z^-1a^-1b^-1ab
step: pos=16 rel=7 sign=+1 conj=x^-1axa^-1x^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1xabzx^-1axa^-1x^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=-1 conj=a^-1x^-1axa^-1x^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1xabzx^-1z^-1a^-1b^-1ab
step: pos=14 rel=0 sign=+1 conj=bzx^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1axbzx^-1z^-1a^-1b^-1ab
step: pos=14 rel=2 sign=-1 conj=x^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1axa^-1zabx^-1z^-1a^-1b^-1ab
step: pos=16 rel=0 sign=+1 conj=a^-1x^-1axbx^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1axa^-1zx^-1axbx^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=-1 conj=a^-1zx^-1axbx^-1z^-1a^-1b^-1ab result=b^-1za^-1z^-1xzx^-1axbx^-1z^-1a^-1b^-1ab
step: pos=16 rel=4 sign=-1 conj=x^-1axbx^-1z^-1a^-1b^-1ab result=b^-1zxbx^-1z^-1a^-1b^-1ab
step: pos=10 rel=0 sign=+1 conj=a^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yaxa^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=+1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=0 sign=-1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yxzx^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=22 rel=4 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yzaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=1 sign=-1 conj=zaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=22 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=+1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=-1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=30 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxybaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=18 rel=2 sign=-1 conj=b^-1ybaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=1 sign=+1 conj=axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=34 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=28 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=28 rel=1 sign=-1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=28 rel=1 sign=+1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=24 rel=7 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=-1 conj=a^-1z^-1x^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxabx^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=bx^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yaxbx^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=bx^-1y^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxabx^-1y^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=3 sign=-1 conj=y^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxaby^-1x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=3 sign=+1 conj=aby^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1xyaby^-1x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=3 sign=-1 conj=aby^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxaby^-1x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=1 sign=+1 conj=y^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yxay^-1bx^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=y^-1bx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1yaxy^-1bx^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=6 sign=+1 conj=y^-1bx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1b^-1axb^2x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=b^2x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1b^-1xab^2x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=7 sign=-1 conj=z^-1bx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxbz^-1b^-1a^-1zaxz^-1bx^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=2 sign=+1 conj=b^-1xz^-1bx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zx^2z^-1bx^-1zx^-1z^-1a^-1b^-1ab
step: pos=14 rel=4 sign=+1 conj=z^-1bx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1xbx^-1zx^-1z^-1a^-1b^-1ab
step: pos=14 rel=4 sign=+1 conj=x^-1axbx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1xzx^-1axbx^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=+1 conj=a^-1zx^-1axbx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1axa^-1zx^-1axbx^-1zx^-1z^-1a^-1b^-1ab
step: pos=22 rel=0 sign=-1 conj=a^-1x^-1axbx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1axa^-1zabx^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=2 sign=+1 conj=x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1axbzx^-1zx^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=-1 conj=bzx^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1xabzx^-1zx^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=+1 conj=a^-1x^-1axa^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1xabzx^-1axa^-1x^-1zx^-1z^-1a^-1b^-1ab
step: pos=22 rel=7 sign=-1 conj=x^-1axa^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1bza^2xa^-1x^-1zx^-1z^-1a^-1b^-1ab
step: pos=20 rel=0 sign=-1 conj=a^-1x^-1zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1bzazx^-1z^-1a^-1b^-1ab
step: pos=16 rel=4 sign=-1 conj=z^-1bzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zxz^-1bzazx^-1z^-1a^-1b^-1ab
step: pos=20 rel=2 sign=-1 conj=b^-1xz^-1bzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaxz^-1bzazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=7 sign=+1 conj=z^-1bzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1xab^2zazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=+1 conj=b^2zazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1b^-1axb^2zazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=6 sign=-1 conj=y^-1bzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxy^-1bzazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=-1 conj=y^-1bzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxay^-1bzazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=1 sign=-1 conj=y^-1zazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=3 sign=+1 conj=aby^-1zazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1xyaby^-1zazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=3 sign=-1 conj=aby^-1zazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxaby^-1zazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=3 sign=+1 conj=y^-1zazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=28 rel=0 sign=+1 conj=bx^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yaxbx^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=28 rel=0 sign=-1 conj=bx^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabx^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=28 rel=0 sign=+1 conj=a^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1yxabzx^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=34 rel=7 sign=-1 conj=x^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybza^2xa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=1 sign=-1 conj=y^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1ybzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=36 rel=1 sign=+1 conj=zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1byzaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=36 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zb^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=36 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=42 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1yaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zabyaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=1 sign=-1 conj=axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1a^-1zaybaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=2 sign=+1 conj=b^-1ybaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zybaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=2 sign=-1 conj=axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yzy^-1b^-1ybz^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=38 rel=1 sign=+1 conj=z^-1b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yb^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=1 sign=-1 conj=b^-1a^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1ya^-1zabaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=2 sign=+1 conj=axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1b^-1ybzaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=30 rel=1 sign=+1 conj=zaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yzaxa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=28 rel=4 sign=+1 conj=x^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yxzx^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=30 rel=0 sign=+1 conj=a^-1zx^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yaxa^-1zx^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=32 rel=0 sign=-1 conj=a^-1x^-1axa^-1z^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1yaxa^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=26 rel=0 sign=-1 conj=a^-1x^-1y^-1xzazx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbz^-1xzazx^-1z^-1a^-1b^-1ab
step: pos=20 rel=4 sign=-1 conj=azx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbxazx^-1z^-1a^-1b^-1ab
step: pos=18 rel=0 sign=+1 conj=zx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zbaxzx^-1z^-1a^-1b^-1ab
step: pos=18 rel=4 sign=-1 conj=x^-1z^-1xzx^-1z^-1a^-1b^-1ab result=b^-1zxz^-1a^-1z^-1x^-1zab
step: pos=10 rel=4 sign=+1 conj=x^-1z^-1b result=b^-1zxz^-1a^-1z^-1x^-1zaxzx^-1z^-1b
step: pos=14 rel=0 sign=-1 conj=zx^-1z^-1b result=b^-1zxz^-1a^-1z^-1x^-1zxazx^-1z^-1b
step: pos=0 rel=4 sign=+1 conj=azx^-1z^-1b result=1
end: 1
)TRACE"},
    {"nilp_a",
     R"TRACE(alphabet: a b x y z
relators:
[a,x]
[b,y]
[ab,z]
[x,y]
[x,z]
[y,z]
[ax,by]
[ax,abz]
[by,abz]
start: a^-1b^-1a^-1bab^-1ab
step: pos=8 rel=1 sign=+1 conj=b^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1byb^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab
step: pos=32 rel=1 sign=-1 conj=z^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1byzy^-1b^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab
step: pos=38 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1bzb^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1ab^-1ab
step: pos=36 rel=2 sign=+1 conj=a^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1bzb^-1yba^-1zay^-1a^-1z^-1ab^-1ab
step: pos=30 rel=2 sign=-1 conj=b^-1yba^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zayba^-1zay^-1a^-1z^-1ab^-1ab
step: pos=30 rel=1 sign=+1 conj=a^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zabya^-1zay^-1a^-1z^-1ab^-1ab
step: pos=30 rel=1 sign=+1 conj=b^-1a^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zab^2yb^-1a^-1zay^-1a^-1z^-1ab^-1ab
step: pos=32 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zab^2yzy^-1b^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1ab^-1ab
step: pos=38 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zab^2zb^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1ab^-1ab
step: pos=36 rel=2 sign=+1 conj=b^-1y^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zab^2zb^-1a^-1z^-1ab^-1ab
step: pos=28 rel=2 sign=-1 conj=b^-1a^-1z^-1ab^-1ab result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2b
step: pos=20 rel=2 sign=+1 conj=b^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2ba^-1zaya^-1z^-1ay^-1bzb^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=-1 conj=b^-1y^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2ba^-1zaya^-1z^-1ay^-1bzb^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a
step: pos=50 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2ba^-1zaya^-1z^-1ay^-1byzy^-1b^-1ybz^-1b^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a
step: pos=52 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2ba^-1zaya^-1z^-1ay^-1byb^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a
step: pos=46 rel=1 sign=-1 conj=b^-1a^-1zay^-1a^-1z^-1aya^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2bya^-1zay^-1a^-1z^-1a
step: pos=28 rel=1 sign=-1 conj=a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^2yba^-1zay^-1a^-1z^-1a
step: pos=28 rel=2 sign=+1 conj=b^-1yba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1abzb^-1yba^-1zay^-1a^-1z^-1a
step: pos=32 rel=2 sign=-1 conj=a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1abzb^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1abyzy^-1b^-1ybz^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=40 rel=1 sign=+1 conj=z^-1b^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1abyb^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=1 sign=-1 conj=b^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1aya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=32 rel=1 sign=+1 conj=b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=54 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=52 rel=2 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=-1 conj=yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=44 rel=0 sign=-1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1xzabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=54 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=4 sign=-1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=40 rel=2 sign=-1 conj=xabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=0 sign=+1 conj=byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=2 sign=-1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=58 rel=2 sign=+1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1za^3xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=52 rel=7 sign=+1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=58 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=50 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=0 sign=+1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=44 rel=2 sign=-1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yz^-1b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=+1 conj=byz^-1b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzbyz^-1b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=8 sign=+1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=-1 conj=ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=46 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=-1 conj=ay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=3 sign=+1 conj=x^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=36 rel=3 sign=-1 conj=bax^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1yxbax^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=36 rel=3 sign=+1 conj=bax^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1zay^-1a^-1z^-1a
step: pos=36 rel=0 sign=+1 conj=x^-1a^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybx^-1zaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=1 sign=+1 conj=x^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyx^-1zaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=6 sign=-1 conj=x^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byazaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=1 sign=-1 conj=azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybazaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=1 sign=-1 conj=y^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybzaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=1 sign=+1 conj=zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byzaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zabyz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=48 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=38 rel=2 sign=+1 conj=ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1a^-1zaya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=32 rel=2 sign=+1 conj=b^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1bzb^-1ya^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=32 rel=2 sign=-1 conj=b^-1a^-1z^-1azaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1bzb^-1ybz^-1b^-1zaba^-1zay^-1a^-1z^-1a
step: pos=32 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1byzy^-1b^-1ybz^-1b^-1zaba^-1zay^-1a^-1z^-1a
step: pos=34 rel=1 sign=+1 conj=z^-1b^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1ay^-1byb^-1zaba^-1zay^-1a^-1z^-1a
step: pos=28 rel=1 sign=-1 conj=b^-1zaba^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1azaba^-1zay^-1a^-1z^-1a
step: pos=24 rel=1 sign=+1 conj=b^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1azab^2yb^-1y^-1a^-1zay^-1a^-1z^-1a
step: pos=28 rel=2 sign=-1 conj=z^-1b^-1a^-1zay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1azab^2yz^-1b^-1a^-1zay^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=2 sign=+1 conj=byz^-1b^-1a^-1zay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1a^2bzbyz^-1b^-1a^-1zay^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=8 sign=+1 conj=z^-1b^-1a^-1zay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyzay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=zay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1aybzay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=1 sign=+1 conj=b^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1aybzay^-1byb^-1y^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=b^-1y^-1byb^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1aybzay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=1 sign=+1 conj=zay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyzay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyb^-1a^-1zabay^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1y^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=1 sign=-1 conj=b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1aya^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a
step: pos=38 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1zay^-1a^-1z^-1a
step: pos=36 rel=2 sign=+1 conj=b^-1y^-1byay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ab^-1a^-1z^-1abzyay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=yay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1ayay^-1a^-1zay^-1a^-1z^-1a
step: pos=20 rel=1 sign=+1 conj=b^-1ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1abyb^-1ay^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=z^-1b^-1ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1abyzy^-1b^-1ybz^-1b^-1ay^-1a^-1zay^-1a^-1z^-1a
step: pos=28 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1abzb^-1ybz^-1b^-1ay^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=+1 conj=b^-1a^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^-1z^-1abzb^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzay^2a^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=20 rel=2 sign=-1 conj=ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1zabya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=36 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaybyz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1byzaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=zaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1ybzaby^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=y^-1b^-1ya^-1z^-1a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1yba^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=+1 conj=a^2y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1bya^2y^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=6 sign=+1 conj=x^-1ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xbyx^-1ay^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=x^-1ay^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybx^-1ay^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=0 sign=-1 conj=x^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybax^-1y^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=3 sign=-1 conj=bax^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1yxbax^-1y^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=3 sign=+1 conj=bax^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybax^-1y^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=3 sign=-1 conj=x^-1y^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=+1 conj=ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xbyay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xybay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=+1 conj=ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xbyay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=8 sign=-1 conj=z^-1b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xabzbyz^-1b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=byz^-1b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xzab^2yz^-1b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=+1 conj=z^-1b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=28 rel=0 sign=-1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=34 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=42 rel=7 sign=-1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzaya^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=36 rel=2 sign=-1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=42 rel=2 sign=+1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=0 sign=-1 conj=byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=2 sign=+1 conj=xabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayxabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=24 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=4 sign=+1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=38 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1xzabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=0 sign=+1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axa^-1zabyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=28 rel=2 sign=+1 conj=yb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbzyb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=36 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=32 rel=1 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayz^-1axbyb^-1y^-1x^-1a^-1zay^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=b^-1y^-1x^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzayay^-1a^-1z^-1a
step: pos=12 rel=2 sign=+1 conj=yay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abzyay^-1a^-1z^-1a
step: pos=18 rel=2 sign=-1 conj=b^-1y^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=28 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=24 rel=1 sign=-1 conj=b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1aya^-1zay^-1byay^-1a^-1z^-1a
step: pos=22 rel=1 sign=+1 conj=b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=24 rel=1 sign=-1 conj=b^-1y^-1byay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyb^-1a^-1zabay^-1a^-1z^-1a
step: pos=22 rel=2 sign=+1 conj=ay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyzay^-1a^-1z^-1a
step: pos=18 rel=1 sign=-1 conj=zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1aybzay^-1a^-1z^-1a
step: pos=18 rel=1 sign=+1 conj=b^-1y^-1byb^-1y^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1aybzay^-1byb^-1y^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=b^-1y^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1aybzay^-1a^-1z^-1a
step: pos=18 rel=1 sign=+1 conj=zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1abyzay^-1a^-1z^-1a
step: pos=18 rel=8 sign=-1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1a^2bzbyz^-1b^-1a^-1zay^-1a^-1z^-1a
step: pos=24 rel=2 sign=-1 conj=byz^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1azab^2yz^-1b^-1a^-1zay^-1a^-1z^-1a
step: pos=24 rel=2 sign=+1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1azab^2yb^-1y^-1a^-1z^-1a
step: pos=20 rel=1 sign=-1 conj=b^-1y^-1a^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1azaba^-1z^-1a
step: pos=16 rel=1 sign=+1 conj=b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1byb^-1zaba^-1z^-1a
step: pos=20 rel=1 sign=-1 conj=z^-1b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1byzy^-1b^-1ybz^-1b^-1zaba^-1z^-1a
step: pos=26 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1bzb^-1ybz^-1b^-1zaba^-1z^-1a
step: pos=24 rel=2 sign=+1 conj=b^-1a^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1bzb^-1ya^-1z^-1azaba^-1z^-1a
step: pos=24 rel=2 sign=-1 conj=b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaya^-1z^-1azaba^-1z^-1a
step: pos=24 rel=2 sign=-1 conj=ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabya^-1z^-1azaba^-1z^-1a
step: pos=30 rel=2 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=40 rel=2 sign=+1 conj=byz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zabyz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=8 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byzaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=1 sign=-1 conj=zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybzaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=1 sign=+1 conj=y^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybazaba^-1z^-1a
step: pos=26 rel=1 sign=+1 conj=azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byazaba^-1z^-1a
step: pos=26 rel=6 sign=+1 conj=x^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyx^-1zaba^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=x^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybx^-1zaba^-1z^-1a
step: pos=26 rel=0 sign=-1 conj=x^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=3 sign=-1 conj=bax^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1yxbax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=3 sign=+1 conj=bax^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=3 sign=-1 conj=x^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=8 sign=-1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzbyz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=-1 conj=byz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=+1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=36 rel=0 sign=-1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=42 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=50 rel=7 sign=-1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1za^3xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=44 rel=2 sign=-1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=50 rel=2 sign=+1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=0 sign=-1 conj=byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=2 sign=+1 conj=xabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=32 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=4 sign=+1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=46 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xzabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=0 sign=+1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=36 rel=2 sign=+1 conj=yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=44 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=46 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=1 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1aya^-1zaba^-1z^-1a
step: pos=24 rel=1 sign=+1 conj=b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=46 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=44 rel=2 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axbzyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=-1 conj=yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=36 rel=0 sign=-1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xzabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=46 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1axa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=4 sign=-1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=32 rel=2 sign=-1 conj=xabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=0 sign=+1 conj=byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=2 sign=-1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=50 rel=2 sign=+1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1za^3xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=44 rel=7 sign=+1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=50 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=42 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=40 rel=0 sign=+1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=36 rel=2 sign=-1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xzab^2yz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=2 sign=+1 conj=byz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xabzbyz^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a
step: pos=34 rel=8 sign=+1 conj=z^-1b^-1y^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=38 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=+1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=1 sign=-1 conj=ay^-1x^-1ya^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybay^-1x^-1ya^-1zaba^-1z^-1a
step: pos=30 rel=3 sign=+1 conj=x^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=3 sign=-1 conj=bax^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1yxbax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=3 sign=+1 conj=bax^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybax^-1a^-1zaba^-1z^-1a
step: pos=28 rel=0 sign=+1 conj=x^-1a^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xybx^-1zaba^-1z^-1a
step: pos=26 rel=1 sign=+1 conj=x^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1xbyx^-1zaba^-1z^-1a
step: pos=26 rel=6 sign=-1 conj=x^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byazaba^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybazaba^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=y^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1ybzaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=1 sign=+1 conj=zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1byzaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=8 sign=-1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zabyz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=34 rel=2 sign=-1 conj=byz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zab^2yz^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a
step: pos=40 rel=2 sign=+1 conj=z^-1b^-1a^-1zaby^-1b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaz^-1b^-1a^-1zabya^-1z^-1azaba^-1z^-1a
step: pos=30 rel=2 sign=+1 conj=ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1a^-1zaya^-1z^-1azaba^-1z^-1a
step: pos=24 rel=2 sign=+1 conj=b^-1ya^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1bzb^-1ya^-1z^-1azaba^-1z^-1a
step: pos=24 rel=2 sign=-1 conj=b^-1a^-1z^-1azaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1bzb^-1ybz^-1b^-1zaba^-1z^-1a
step: pos=24 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1byzy^-1b^-1ybz^-1b^-1zaba^-1z^-1a
step: pos=26 rel=1 sign=+1 conj=z^-1b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1ay^-1byb^-1zaba^-1z^-1a
step: pos=20 rel=1 sign=-1 conj=b^-1zaba^-1z^-1a result=a^-1b^-1a^-1bzab^-1a^-1z^-1azaba^-1z^-1a
step: pos=16 rel=2 sign=+1 conj=b^-1a^-1z^-1bzab^-1a^-1z^-1azaba^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1azaba^-1z^-1a
step: pos=18 rel=1 sign=+1 conj=b^-1y^-1byb^-1y^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yb^-1y^-1a^-1z^-1a
step: pos=22 rel=2 sign=-1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yz^-1b^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=2 sign=+1 conj=byz^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1a^2bzbyz^-1b^-1a^-1zay^-1a^-1z^-1a
step: pos=26 rel=8 sign=+1 conj=z^-1b^-1a^-1zay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1a^-1z^-1a
step: pos=20 rel=1 sign=-1 conj=zay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1a^-1z^-1a
step: pos=20 rel=1 sign=+1 conj=b^-1y^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1byb^-1y^-1a^-1z^-1a
step: pos=24 rel=1 sign=-1 conj=b^-1y^-1byb^-1y^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1a^-1z^-1a
step: pos=20 rel=1 sign=+1 conj=zay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1a^-1z^-1a
step: pos=20 rel=2 sign=-1 conj=ay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zabay^-1a^-1z^-1a
step: pos=24 rel=1 sign=+1 conj=b^-1y^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1aya^-1zay^-1byay^-1a^-1z^-1a
step: pos=24 rel=1 sign=+1 conj=b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=26 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=32 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1zay^-1byay^-1a^-1z^-1a
step: pos=30 rel=2 sign=+1 conj=b^-1y^-1byay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzab^-1a^-1z^-1abzyay^-1a^-1z^-1a
step: pos=20 rel=2 sign=-1 conj=yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bzayay^-1a^-1z^-1a
step: pos=14 rel=0 sign=+1 conj=a^-1x^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1bza^2xa^-1x^-1yay^-1a^-1z^-1a
step: pos=18 rel=7 sign=+1 conj=x^-1axa^-1x^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1xabzx^-1axa^-1x^-1yay^-1a^-1z^-1a
step: pos=20 rel=0 sign=-1 conj=a^-1x^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1xabzx^-1yay^-1a^-1z^-1a
step: pos=16 rel=0 sign=+1 conj=bzx^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1axbzx^-1yay^-1a^-1z^-1a
step: pos=16 rel=2 sign=-1 conj=x^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1axa^-1zabx^-1yay^-1a^-1z^-1a
step: pos=18 rel=0 sign=+1 conj=a^-1x^-1axbx^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1axa^-1zx^-1axbx^-1yay^-1a^-1z^-1a
step: pos=20 rel=0 sign=-1 conj=a^-1zx^-1axbx^-1yay^-1a^-1z^-1a result=a^-1zb^-1a^-1z^-1xzx^-1axbx^-1yay^-1a^-1z^-1a
step: pos=18 rel=4 sign=-1 conj=x^-1axbx^-1yay^-1a^-1z^-1a result=a^-1zb^-1xbx^-1yay^-1a^-1z^-1a
step: pos=12 rel=3 sign=+1 conj=x^-1ay^-1a^-1z^-1a result=a^-1zb^-1xbyx^-1ay^-1a^-1z^-1a
step: pos=12 rel=1 sign=-1 conj=x^-1ay^-1a^-1z^-1a result=a^-1zb^-1xybx^-1ay^-1a^-1z^-1a
step: pos=12 rel=3 sign=-1 conj=y^-1x^-1a^-1z^-1a result=a^-1zb^-1xybx^-1axy^-1x^-1a^-1z^-1a
step: pos=14 rel=0 sign=-1 conj=y^-1x^-1a^-1z^-1a result=a^-1zb^-1xybay^-1x^-1a^-1z^-1a
step: pos=12 rel=1 sign=+1 conj=ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xbyay^-1x^-1a^-1z^-1a
step: pos=12 rel=1 sign=-1 conj=ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xybay^-1x^-1a^-1z^-1a
step: pos=12 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xybay^-1x^-1a^-1z^-1a
step: pos=12 rel=1 sign=+1 conj=ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xbyay^-1x^-1a^-1z^-1a
step: pos=12 rel=8 sign=-1 conj=z^-1b^-1y^-1x^-1a^-1z^-1a result=a^-1zb^-1xabzbyz^-1b^-1y^-1x^-1a^-1z^-1a
step: pos=16 rel=2 sign=-1 conj=byz^-1b^-1y^-1x^-1a^-1z^-1a result=a^-1zb^-1xzab^2yz^-1b^-1y^-1x^-1a^-1z^-1a
step: pos=16 rel=2 sign=+1 conj=z^-1b^-1y^-1x^-1a^-1z^-1a result=a^-1zb^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=18 rel=0 sign=-1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=24 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=32 rel=7 sign=-1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1z^2a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=28 rel=2 sign=-1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=32 rel=2 sign=+1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=0 sign=-1 conj=byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zb^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=2 sign=+1 conj=xabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1z^2xabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=16 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1z^2xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=4 sign=+1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zxb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=28 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zxb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zxzabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=16 rel=0 sign=+1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxa^-1zabyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=18 rel=2 sign=+1 conj=yb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbzyb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=16 rel=2 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=26 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=28 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=20 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a
step: pos=22 rel=1 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1a^-1z^-1a result=a^-1zaxbyb^-1y^-1x^-1a^-1z^-1a
step: pos=0 rel=1 sign=-1 conj=b^-1y^-1x^-1a^-1z^-1a result=1
step: pos=0 rel=1 sign=+1 conj=b^-1y^-1byb^-1y^-1x^-1 result=xbyb^-1y^-1x^-1
step: pos=6 rel=1 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=14 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=22 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=20 rel=2 sign=+1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbzyb^-1a^-1z^-1ay^-1x^-1
step: pos=10 rel=2 sign=-1 conj=yb^-1a^-1z^-1ay^-1x^-1 result=xa^-1zabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=0 sign=-1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xzabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=22 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=4 sign=-1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=a^-1zxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1 result=a^-1zxabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=2 sign=-1 conj=xabyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=+1 conj=byb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=2 sign=-1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=28 rel=2 sign=+1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1za^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=24 rel=7 sign=+1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=28 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=20 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=0 sign=+1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1
step: pos=14 rel=2 sign=-1 conj=z^-1b^-1y^-1x^-1 result=a^-1b^-1xzab^2yz^-1b^-1y^-1x^-1
step: pos=12 rel=2 sign=+1 conj=byz^-1b^-1y^-1x^-1 result=a^-1b^-1xabzbyz^-1b^-1y^-1x^-1
step: pos=12 rel=8 sign=+1 conj=z^-1b^-1y^-1x^-1 result=a^-1b^-1xbyay^-1x^-1
step: pos=8 rel=1 sign=-1 conj=ay^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=1 sign=+1 conj=ay^-1x^-1 result=a^-1b^-1xbyay^-1x^-1
step: pos=8 rel=1 sign=-1 conj=ay^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=0 sign=+1 conj=y^-1x^-1 result=a^-1b^-1xybx^-1axy^-1x^-1
step: pos=10 rel=3 sign=+1 conj=y^-1x^-1 result=a^-1b^-1xybx^-1ay^-1
step: pos=8 rel=1 sign=+1 conj=x^-1ay^-1 result=a^-1b^-1xbyx^-1ay^-1
step: pos=8 rel=3 sign=-1 conj=x^-1ay^-1 result=a^-1b^-1xbx^-1yay^-1
step: pos=8 rel=4 sign=+1 conj=x^-1axbx^-1yay^-1 result=a^-1b^-1a^-1z^-1xzx^-1axbx^-1yay^-1
step: pos=14 rel=0 sign=+1 conj=a^-1zx^-1axbx^-1yay^-1 result=a^-1b^-1a^-1z^-1axa^-1zx^-1axbx^-1yay^-1
step: pos=16 rel=0 sign=-1 conj=a^-1x^-1axbx^-1yay^-1 result=a^-1b^-1a^-1z^-1axa^-1zabx^-1yay^-1
step: pos=14 rel=2 sign=+1 conj=x^-1yay^-1 result=a^-1b^-1a^-1z^-1axbzx^-1yay^-1
step: pos=12 rel=0 sign=-1 conj=bzx^-1yay^-1 result=a^-1b^-1a^-1z^-1xabzx^-1yay^-1
step: pos=12 rel=0 sign=+1 conj=a^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1xabzx^-1axa^-1x^-1yay^-1
step: pos=16 rel=7 sign=-1 conj=x^-1axa^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1bza^2xa^-1x^-1yay^-1
step: pos=14 rel=0 sign=-1 conj=a^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1bzayay^-1
step: pos=10 rel=2 sign=+1 conj=yay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abzyay^-1
step: pos=16 rel=2 sign=-1 conj=b^-1y^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1zay^-1byay^-1
step: pos=26 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1
step: pos=28 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1
step: pos=22 rel=1 sign=-1 conj=b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aya^-1zay^-1byay^-1
step: pos=20 rel=1 sign=+1 conj=b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1
step: pos=22 rel=1 sign=-1 conj=b^-1y^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zabay^-1
step: pos=20 rel=2 sign=+1 conj=ay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1
step: pos=16 rel=1 sign=-1 conj=zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1
step: pos=16 rel=1 sign=+1 conj=b^-1y^-1byb^-1y^-1byb^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1byb^-1y^-1
step: pos=16 rel=1 sign=-1 conj=b^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1
step: pos=16 rel=1 sign=+1 conj=zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1
step: pos=16 rel=8 sign=-1 conj=z^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1a^2bzbyz^-1b^-1a^-1zay^-1
step: pos=22 rel=2 sign=-1 conj=byz^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yz^-1b^-1a^-1zay^-1
step: pos=22 rel=2 sign=+1 conj=z^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yb^-1y^-1
step: pos=14 rel=1 sign=-1 conj=b^-1y^-1byb^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1azab
step: pos=14 rel=1 sign=+1 conj=b^-1y^-1byb^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yb^-1y^-1
step: pos=18 rel=2 sign=-1 conj=z^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1azab^2yz^-1b^-1a^-1zay^-1
step: pos=22 rel=2 sign=+1 conj=byz^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1a^2bzbyz^-1b^-1a^-1zay^-1
step: pos=22 rel=8 sign=+1 conj=z^-1b^-1a^-1zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1
step: pos=16 rel=1 sign=-1 conj=zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1
step: pos=16 rel=1 sign=+1 conj=b^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1byb^-1y^-1
step: pos=16 rel=1 sign=-1 conj=b^-1y^-1byb^-1y^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aybzay^-1
step: pos=16 rel=1 sign=+1 conj=zay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzay^-1
step: pos=16 rel=2 sign=-1 conj=ay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zabay^-1
step: pos=20 rel=1 sign=+1 conj=b^-1y^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1
step: pos=22 rel=1 sign=-1 conj=b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1aya^-1zay^-1byay^-1
step: pos=20 rel=1 sign=+1 conj=b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyb^-1a^-1zay^-1byay^-1
step: pos=22 rel=1 sign=-1 conj=z^-1b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1
step: pos=28 rel=5 sign=-1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abzb^-1ybz^-1b^-1a^-1zay^-1byay^-1
step: pos=26 rel=2 sign=+1 conj=b^-1y^-1byay^-1 result=a^-1b^-1a^-1z^-1bzab^-1a^-1z^-1abzyay^-1
step: pos=16 rel=2 sign=-1 conj=yay^-1 result=a^-1b^-1a^-1z^-1bzayay^-1
step: pos=10 rel=0 sign=+1 conj=a^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1bza^2xa^-1x^-1yay^-1
step: pos=14 rel=7 sign=+1 conj=x^-1axa^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1xabzx^-1axa^-1x^-1yay^-1
step: pos=16 rel=0 sign=-1 conj=a^-1x^-1yay^-1 result=a^-1b^-1a^-1z^-1xabzx^-1yay^-1
step: pos=12 rel=0 sign=+1 conj=bzx^-1yay^-1 result=a^-1b^-1a^-1z^-1axbzx^-1yay^-1
step: pos=12 rel=2 sign=-1 conj=x^-1yay^-1 result=a^-1b^-1a^-1z^-1axa^-1zabx^-1yay^-1
step: pos=14 rel=0 sign=+1 conj=a^-1x^-1axbx^-1yay^-1 result=a^-1b^-1a^-1z^-1axa^-1zx^-1axbx^-1yay^-1
step: pos=16 rel=0 sign=-1 conj=a^-1zx^-1axbx^-1yay^-1 result=a^-1b^-1a^-1z^-1xzx^-1axbx^-1yay^-1
step: pos=14 rel=4 sign=-1 conj=x^-1axbx^-1yay^-1 result=a^-1b^-1xbx^-1yay^-1
step: pos=8 rel=3 sign=+1 conj=x^-1ay^-1 result=a^-1b^-1xbyx^-1ay^-1
step: pos=8 rel=1 sign=-1 conj=x^-1ay^-1 result=a^-1b^-1xybx^-1ay^-1
step: pos=8 rel=3 sign=-1 conj=y^-1x^-1 result=a^-1b^-1xybx^-1axy^-1x^-1
step: pos=10 rel=0 sign=-1 conj=y^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=1 sign=+1 conj=ay^-1x^-1 result=a^-1b^-1xbyay^-1x^-1
step: pos=8 rel=1 sign=-1 conj=ay^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=1 sign=+1 conj=b^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xybzay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=b^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xybay^-1x^-1
step: pos=8 rel=1 sign=+1 conj=ay^-1x^-1 result=a^-1b^-1xbyay^-1x^-1
step: pos=8 rel=8 sign=-1 conj=z^-1b^-1y^-1x^-1 result=a^-1b^-1xabzbyz^-1b^-1y^-1x^-1
step: pos=12 rel=2 sign=-1 conj=byz^-1b^-1y^-1x^-1 result=a^-1b^-1xzab^2yz^-1b^-1y^-1x^-1
step: pos=12 rel=2 sign=+1 conj=z^-1b^-1y^-1x^-1 result=a^-1b^-1xzab^2yb^-1a^-1z^-1ay^-1x^-1
step: pos=14 rel=0 sign=-1 conj=x^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=0 sign=+1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1axa^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=20 rel=0 sign=-1 conj=a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xzabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1xabzx^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=28 rel=7 sign=-1 conj=x^-1axa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1za^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=24 rel=2 sign=-1 conj=a^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zaba^2xa^-1z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1
step: pos=28 rel=2 sign=+1 conj=z^-1b^-1a^-1zabax^-1a^-1xbyb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zabaxbyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=-1 conj=byb^-1a^-1z^-1ay^-1x^-1 result=a^-1b^-1a^-1zabxabyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=2 sign=+1 conj=xabyb^-1a^-1z^-1ay^-1x^-1 result=a^-1zxabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=2 sign=-1 conj=abyb^-1a^-1z^-1ay^-1x^-1 result=a^-1zxz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=18 rel=4 sign=+1 conj=z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=+1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=-1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1zax^-1a^-1xz^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=22 rel=0 sign=+1 conj=a^-1z^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=0 sign=-1 conj=a^-1b^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xb^-1a^-1zababyb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=2 sign=+1 conj=abyb^-1a^-1z^-1ay^-1x^-1 result=a^-1xzabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=0 sign=+1 conj=a^-1zabyb^-1a^-1z^-1ay^-1x^-1 result=xa^-1zabyb^-1a^-1z^-1ay^-1x^-1
step: pos=12 rel=2 sign=+1 conj=yb^-1a^-1z^-1ay^-1x^-1 result=xbzyb^-1a^-1z^-1ay^-1x^-1
step: pos=10 rel=2 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbzb^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=20 rel=5 sign=+1 conj=y^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyzy^-1b^-1ybz^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=22 rel=1 sign=+1 conj=z^-1b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xya^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=14 rel=1 sign=+1 conj=b^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyb^-1a^-1zay^-1byb^-1a^-1z^-1ay^-1x^-1
step: pos=16 rel=1 sign=-1 conj=b^-1y^-1byb^-1a^-1z^-1ay^-1x^-1 result=xbyb^-1y^-1x^-1
step: pos=0 rel=1 sign=-1 conj=b^-1y^-1x^-1 result=1
end: 1
)TRACE"},
};

inline constexpr int kGammaTraceCount = 16;

}  // namespace grouplaw
