function f0(p1, p2) {
  if (p2 !== 0 / 4) {
    let v3 = -(p1 - p1);
    19;
  }
  return 1e-2;
}
for (let i4 = 0; i4 < 5; i4 += 1) {
  for (let i5 = 0; i5 < 3; i5 += 1) {
    f0(f0(17, f0(i4 - i5, -i5)), 1e21 % 1e14);
  }
  1e14;
  7.59;
}
let w6 = 4;
while (w6 > 0) {
  w6 -= 1;
  let v7 = 'a' + '';
  console.log(1e19 % 0 % -10);
  let v8 = 4;
}
if ((false) || (false)) {
  if (w6 + 1e-3 !== -1e18) {
    let w9 = 1;
    while (w9 > 0) {
      w9 -= 1;
      let w10 = 0;
      while (w10 > 0) {
        w10 -= 1;
        let v11 = "x y";
        let v12 = '\t\u00e9';
      }
      {
        console.log((f0(4.50, 0.11) - f0(4, 89830 - 44317)));
      }
      f0(5409, w10 - w9);
    }
  } else {
    16;
    f0(14, (0));
    let v13 = true;
  }
  console.log(-(w6 - 8.21));
  console.log("x y" !== ('a'), '' !== '\t\u00e9' || '\t\u00e9' !== '\t\u00e9');
}
for (let i14 = 0; i14 < 5; i14 += 1) {
  let v15 = w6 !== 18 * 1e-4;
  let v16 = -(-w6);
}
console.log();
console.log(w6);
{
  console.log(14);
  if (true === w6 > w6 && true) {
    for (let i17 = 0; i17 < 2; i17 += 1) {
      console.log(1e6);
    }
    {
      if (!(!(w6 !== w6))) {
        console.log('\t\u00e9');
        console.log('a');
        let v18 = (1e7) + w6;
      } else {
        console.log((w6 / 6));
      }
      let v19 = w6;
      61711;
    }
    for (let i20 = 0; i20 < 1; i20 += 1) {
      console.log(0);
      let v21 = 0;
    }
  } else {
    console.log(0 % (0), -w6, false);
    for (let i22 = 0; i22 < 5; i22 += 1) {
      let w23 = 1;
      while (w23 > 0) {
        w23 -= 1;
        console.log('' + 'a' === 'a', '1', w6 + w23 / w6);
      }
      for (let i24 = 0; i24 < 5; i24 += 1) {
        10;
        console.log("x y");
        console.log((2) * -i24 % 0 * 1e2);
      }
      for (let i25 = 0; i25 < 3; i25 += 1) {
        let v26 = w23 <= 0 - 1e4;
        console.log(w23 + -15328);
      }
    }
  }
  if ((0.15) === 1e13 + w6) {
    if (!(false || false)) {
      for (let i27 = 0; i27 < 2; i27 += 1) {
        let v28 = 4 / i27 <= w6 / w6;
        console.log(f0(f0(i27, -1e2), 0 / 1e-8) / 48266 * 13 / w6);
        console.log('' + '7');
      }
      {
        let v29 = '3';
        f0(0, 10 * w6);
        v29 = 'a';
      }
    } else {
      for (let i30 = 0; i30 < 4; i30 += 1) {
        console.log(f0(4.71, (9)) * i30 - 30580);
        let v31 = ((false));
      }
    }
    0;
    let w32 = 2;
    while (w32 > 0) {
      w32 -= 1;
      console.log(14);
    }
  } else {
    let w33 = 2;
    while (w33 > 0) {
      w33 -= 1;
      for (let i34 = 0; i34 < 6; i34 += 1) {
        let v35 = ('a') + '\t\u00e9';
        let v36 = v35 + v35 + v35;
      }
      console.log(f0((w6), 0) + -3);
    }
    for (let i37 = 0; i37 < 2; i37 += 1) {
      let v38 = true;
      console.log(i37 * 5.81 >= w6 - 1e8, 1e16 - 6.33 % 0 * w33);
    }
    {
      for (let i39 = 0; i39 < 0; i39 += 1) {
        console.log(("x y"));
        console.log('0', w33 !== -2.99);
      }
      let v40 = (f0(1, w6 - w33));
      console.log(-(1e-4 * 1e15));
    }
  }
}
