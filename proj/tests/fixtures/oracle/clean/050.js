function f0(p1) {
  let w2 = 3;
  while (w2 > 0) {
    w2 -= 1;
    for (let i3 = 0; i3 < 0; i3 += 1) {
      console.log(((0)));
      console.log(('a') + ('\t\u00e9'), i3 >= p1 || false && !(0 <= i3), 'a' !== "x y" && !(53682 < i3));
    }
    return 4;
  }
  if (false) {
    let v4 = "x y";
  } else {
    for (let i5 = 0; i5 < 1; i5 += 1) {
      let v6 = '\t\u00e9';
      console.log(-(1e5));
    }
  }
  p1 /= p1;
  console.log((('')));
  return (w2) * (1);
}
let v7 = f0(99304);
console.log('a' + 'a');
let w8 = 4;
while (w8 > 0) {
  w8 -= 1;
  if ((1e8 > 0 === 8076 !== w8)) {
    v7 *= f0(5.31 % 2.41);
  }
}
console.log();
console.log((v7 / 0));
for (let i9 = 0; i9 < 6; i9 += 1) {
  if (9 <= i9 === 3 === i9) {
    let v10 = f0(4);
    for (let i11 = 0; i11 < 3; i11 += 1) {
      if ((5.51 <= 20)) {
        f0(v10 - 1e15);
      } else {
        let v12 = i9;
        console.log((("x y")), (v12 !== 0 || false), false);
        f0(0);
      }
    }
    for (let i13 = 0; i13 < 6; i13 += 1) {
      {
        28184;
        f0(42749 * i9);
        console.log(f0(-12));
      }
      for (let i14 = 0; i14 < 0; i14 += 1) {
        console.log('a', !(1e-5 >= w8) || 6 > 20);
        console.log('a' + '2' === 'a');
        console.log(49053 * 1e15 > 11, false);
      }
    }
  } else {
    {
      {
        let v15 = 8;
      }
    }
  }
  {
    f0(i9 * 2);
    for (let i16 = 0; i16 < 2; i16 += 1) {
      let w17 = 0;
      while (w17 > 0) {
        w17 -= 1;
        let v18 = 20;
        console.log(-1e-1 < 11 / 1e1 === 6 / 1e3 >= 19);
      }
      console.log(f0(v7 % 8));
      if (('') === 'a') {
        let v19 = '\t\u00e9' + '9' + '1';
        let v20 = -(w8);
        console.log((v7) * 0 === -w8);
      }
    }
    console.log(false || (true));
  }
}
