for (let i0 = 0; i0 < 5; i0 += 1) {
  console.log(i0 + 13 % 10);
  let w1 = 5;
  while (w1 > 0) {
    w1 -= 1;
    for (let i2 = 0; i2 < 2; i2 += 1) {
      {
        let v3 = -1e-4;
      }
      if (2.22 < (w1)) {
        let v4 = (7.61) + 0;
        console.log(6890 + 6 - -50484 * -w1);
      } else {
        console.log();
        console.log();
        let v5 = ('');
      }
    }
  }
}
1e-8;
console.log('5');
let v6 = ((false));
