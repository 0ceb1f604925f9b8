let s = 'tab\there';
console.log(s);
console.log('quote " and \' and \\');
console.log("unicode é中 and \x41");
console.log('line1\nline2');
console.log('', 'a', '');
