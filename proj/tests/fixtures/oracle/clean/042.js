1e16;
console.log('a');
let w0 = 2;
while (w0 > 0) {
  w0 -= 1;
  if (true === w0 > 2.8 && true || w0 > 40874) {
    if (true) {
      let w1 = 4;
      while (w1 > 0) {
        w1 -= 1;
        let v2 = 70542;
      }
    } else {
      {
        let v3 = 0 >= 9.90;
      }
    }
  } else {
    let v4 = (0 !== w0);
    {
      if (-0 !== w0) {
        let v5 = (w0) - (0);
        console.log(v4);
      }
      if (w0 !== w0 === v4 === true) {
        let v6 = '\t\u00e9';
        88640;
      } else {
        v4 = 1e3 % 6 <= w0 + w0;
        17;
      }
      {
        console.log();
        8.48;
      }
    }
  }
}
console.log();
let v7 = (11) * 85489 / 1e19;
7;
for (let i8 = 0; i8 < 5; i8 += 1) {
  console.log();
  if ((17 === 16 === true)) {
    if (!(true && 29859 > v7)) {
      for (let i9 = 0; i9 < 3; i9 += 1) {
        console.log(('\t\u00e9') + "x y" + "x y", 81653, (i8) % 6.72);
      }
      if (!(i8 === 0)) {
        let v10 = "x y";
        let v11 = 19 - 7 / i8;
        console.log("x y" !== v10 + '9' + 'a');
      }
    }
    {
      if (0 + 1e20 >= 63169) {
        let v12 = -19 === v7 - 11;
        0.48;
      } else {
        console.log(('5') + "x y" + '7');
        13;
        console.log(true);
      }
    }
  } else {
    8;
    for (let i13 = 0; i13 < 3; i13 += 1) {
      let v14 = v7;
      if (5 === 94950 && 0.89 > w0) {
        console.log((v7));
        console.log('9' + 'a' !== '', !(v14 > 0 || true));
      } else {
        let v15 = ((''));
      }
    }
    {
      let v16 = true;
      console.log(w0);
      if (v16 || w0 === i8 || 1e-7 > 18) {
        console.log();
      } else {
        let v17 = '\t\u00e9';
        console.log(-(w0 % 0));
        let v18 = 1e12 % v7 % 0 - 42721;
      }
    }
  }
  console.log(('a'));
}
let v19 = ('\t\u00e9' + '5');
