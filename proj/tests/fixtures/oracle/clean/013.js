console.log(0.1 * 3, 0.3 / 0.1, 1.1 * 1.1, 9007199254740993, 9007199254740992 + 1);
console.log(123.456e5, 1e-6, 1e-7, 12e-7, 100, 1e2, 1e100);
console.log(-1e-7, -123.5, 5e-324);
