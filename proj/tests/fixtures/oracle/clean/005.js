let x = 10;
{
  let x = 20;
  console.log(x);
  {
    let x = 30;
    console.log(x);
  }
}
console.log(x);
